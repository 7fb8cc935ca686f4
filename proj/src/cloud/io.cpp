#include "harvest/cloud/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "harvest/core/errors.hpp"

namespace harvest {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

double parse_double(const std::string& tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw NonFiniteValue("unparseable numeric value '" + tok + "'");
    }
    if (used != tok.size()) throw NonFiniteValue("unparseable numeric value '" + tok + "'");
    if (!std::isfinite(v)) throw NonFiniteValue("non-finite value '" + tok + "'");
    return v;
}

struct Row {
    Vec3 position;
    Vec3 color;
    std::uint8_t label = 0;
};

ColorPointCloud load_ply(std::ifstream& in, std::vector<std::uint8_t>* labels_out) {
    std::string line;
    std::size_t vertex_count = 0;
    bool in_vertex_element = false;
    std::vector<std::string> props;       // property names in declared order
    std::vector<bool> prop_is_uchar;
    std::optional<Vec3> viewpoint;

    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        std::string key = lowercase(toks[0]);
        if (key == "format") {
            if (toks.size() < 2 || lowercase(toks[1]) != "ascii")
                throw MalformedHeader("only ASCII PLY is supported");
        } else if (key == "comment") {
            if (toks.size() == 5 && lowercase(toks[1]) == "viewpoint")
                viewpoint = Vec3(parse_double(toks[2]), parse_double(toks[3]), parse_double(toks[4]));
        } else if (key == "element") {
            if (toks.size() < 3) throw MalformedHeader("malformed element line");
            in_vertex_element = lowercase(toks[1]) == "vertex";
            if (in_vertex_element) vertex_count = static_cast<std::size_t>(std::stoull(toks[2]));
        } else if (key == "property" && in_vertex_element) {
            if (toks.size() < 3) throw MalformedHeader("malformed property line");
            props.push_back(lowercase(toks[2]));
            prop_is_uchar.push_back(lowercase(toks[1]) == "uchar" || lowercase(toks[1]) == "uint8");
        } else if (key == "end_header") {
            break;
        }
    }

    auto find_prop = [&](const std::string& name) -> int {
        auto it = std::find(props.begin(), props.end(), name);
        return it == props.end() ? -1 : static_cast<int>(it - props.begin());
    };
    int ix = find_prop("x"), iy = find_prop("y"), iz = find_prop("z");
    if (ix < 0 || iy < 0 || iz < 0) throw MalformedHeader("PLY vertex element lacks x/y/z properties");
    int ir = find_prop("red"), ig = find_prop("green"), ib = find_prop("blue");
    if (ir < 0 || ig < 0 || ib < 0) throw MalformedHeader("PLY vertex element lacks red/green/blue properties");
    int il = find_prop("label");

    ColorPointCloud cloud;
    cloud.points.reserve(vertex_count);
    if (viewpoint) cloud.viewpoint = *viewpoint;
    if (labels_out) labels_out->clear();

    std::size_t rows = 0;
    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (rows == vertex_count) throw InconsistentRowCount("more data rows than declared vertices");
        if (toks.size() < props.size()) throw InconsistentRowCount("short data row");
        ColorPoint p;
        p.position = Vec3(parse_double(toks[ix]), parse_double(toks[iy]), parse_double(toks[iz]));
        auto channel = [&](int idx) {
            double v = parse_double(toks[idx]);
            return prop_is_uchar[idx] ? v / 255.0 : v;
        };
        p.color = Vec3(channel(ir), channel(ig), channel(ib));
        cloud.points.push_back(p);
        if (labels_out && il >= 0) labels_out->push_back(parse_double(toks[il]) != 0.0 ? 1 : 0);
        ++rows;
    }
    if (rows != vertex_count)
        throw InconsistentRowCount("declared " + std::to_string(vertex_count) + " vertices, found " +
                                   std::to_string(rows));
    return cloud;
}

ColorPointCloud load_pcd(std::ifstream& in, const std::string& first_line,
                         std::vector<std::uint8_t>* labels_out) {
    std::string line = first_line;
    std::vector<std::string> fields;
    std::vector<std::string> types;
    std::size_t declared_points = 0;
    bool have_points = false;
    Vec3 viewpoint = Vec3::Zero();
    bool data_seen = false;

    do {
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        std::string key = lowercase(toks[0]);
        if (key.rfind('#', 0) == 0) continue;
        if (key == "fields") {
            fields.assign(toks.begin() + 1, toks.end());
            for (auto& f : fields) f = lowercase(f);
        } else if (key == "type") {
            types.assign(toks.begin() + 1, toks.end());
        } else if (key == "viewpoint") {
            if (toks.size() >= 4)
                viewpoint = Vec3(parse_double(toks[1]), parse_double(toks[2]), parse_double(toks[3]));
        } else if (key == "points") {
            declared_points = static_cast<std::size_t>(std::stoull(toks[1]));
            have_points = true;
        } else if (key == "width" && !have_points) {
            declared_points = static_cast<std::size_t>(std::stoull(toks[1]));
        } else if (key == "data") {
            if (toks.size() < 2 || lowercase(toks[1]) != "ascii")
                throw MalformedHeader("only DATA ascii PCD is supported");
            data_seen = true;
            break;
        }
    } while (std::getline(in, line));
    if (!data_seen) throw MalformedHeader("PCD header lacks DATA line");

    auto find_field = [&](const std::string& name) -> int {
        auto it = std::find(fields.begin(), fields.end(), name);
        return it == fields.end() ? -1 : static_cast<int>(it - fields.begin());
    };
    int ix = find_field("x"), iy = find_field("y"), iz = find_field("z");
    if (ix < 0 || iy < 0 || iz < 0) throw MalformedHeader("PCD FIELDS lack x/y/z");
    int irgb = find_field("rgb");
    if (irgb < 0) throw MalformedHeader("PCD FIELDS lack rgb");
    int il = find_field("label");
    bool rgb_is_uint = irgb < static_cast<int>(types.size()) && lowercase(types[irgb]) == "u";

    ColorPointCloud cloud;
    cloud.viewpoint = viewpoint;
    cloud.points.reserve(declared_points);
    if (labels_out) labels_out->clear();

    std::size_t rows = 0;
    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (rows == declared_points) throw InconsistentRowCount("more data rows than declared points");
        if (toks.size() < fields.size()) throw InconsistentRowCount("short data row");
        ColorPoint p;
        p.position = Vec3(parse_double(toks[ix]), parse_double(toks[iy]), parse_double(toks[iz]));
        std::uint32_t packed;
        if (rgb_is_uint) {
            packed = static_cast<std::uint32_t>(std::stoull(toks[irgb]));
        } else {
            float f = static_cast<float>(parse_double(toks[irgb]));
            packed = std::bit_cast<std::uint32_t>(f);
        }
        p.color = unpack_rgb(packed);
        cloud.points.push_back(p);
        if (labels_out && il >= 0) labels_out->push_back(parse_double(toks[il]) != 0.0 ? 1 : 0);
        ++rows;
    }
    if (rows != declared_points)
        throw InconsistentRowCount("declared " + std::to_string(declared_points) + " points, found " +
                                   std::to_string(rows));
    return cloud;
}

}  // namespace

std::uint32_t pack_rgb(const Vec3& color) {
    auto to_byte = [](double c) {
        return static_cast<std::uint32_t>(std::lround(std::clamp(c, 0.0, 1.0) * 255.0));
    };
    return (to_byte(color.x()) << 16) | (to_byte(color.y()) << 8) | to_byte(color.z());
}

Vec3 unpack_rgb(std::uint32_t packed) {
    return Vec3(((packed >> 16) & 0xFF) / 255.0, ((packed >> 8) & 0xFF) / 255.0,
                (packed & 0xFF) / 255.0);
}

ColorPointCloud load_cloud(const std::string& path, std::vector<std::uint8_t>* labels_out) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open '" + path + "'");
    std::string first;
    if (!std::getline(in, first)) throw MalformedHeader("empty file '" + path + "'");
    auto toks = split_ws(first);
    if (!toks.empty() && lowercase(toks[0]) == "ply") return load_ply(in, labels_out);
    return load_pcd(in, first, labels_out);
}

void save_cloud(const ColorPointCloud& cloud, const std::string& path, CloudFormat format,
                const std::vector<std::uint8_t>* labels) {
    if (cloud.empty()) throw EmptyCloud("refusing to save empty cloud");
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot open '" + path + "' for writing");

    char buf[160];
    if (format == CloudFormat::PLY) {
        out << "ply\nformat ascii 1.0\n";
        std::snprintf(buf, sizeof(buf), "comment viewpoint %.6f %.6f %.6f\n", cloud.viewpoint.x(),
                      cloud.viewpoint.y(), cloud.viewpoint.z());
        out << buf;
        out << "element vertex " << cloud.size() << "\n";
        out << "property float x\nproperty float y\nproperty float z\n";
        out << "property uchar red\nproperty uchar green\nproperty uchar blue\n";
        if (labels) out << "property uchar label\n";
        out << "end_header\n";
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            const auto& p = cloud.points[i];
            std::uint32_t packed = pack_rgb(p.color);
            std::snprintf(buf, sizeof(buf), "%.6f %.6f %.6f %u %u %u", p.position.x(),
                          p.position.y(), p.position.z(), (packed >> 16) & 0xFF, (packed >> 8) & 0xFF,
                          packed & 0xFF);
            out << buf;
            if (labels) out << ' ' << static_cast<unsigned>((*labels)[i] ? 1 : 0);
            out << '\n';
        }
    } else {
        out << "# .PCD v0.7 - Point Cloud Data file format\nVERSION 0.7\n";
        if (labels) {
            out << "FIELDS x y z rgb label\nSIZE 4 4 4 4 4\nTYPE F F F F U\nCOUNT 1 1 1 1 1\n";
        } else {
            out << "FIELDS x y z rgb\nSIZE 4 4 4 4\nTYPE F F F F\nCOUNT 1 1 1 1\n";
        }
        out << "WIDTH " << cloud.size() << "\nHEIGHT 1\n";
        std::snprintf(buf, sizeof(buf), "VIEWPOINT %.6f %.6f %.6f 1 0 0 0\n", cloud.viewpoint.x(),
                      cloud.viewpoint.y(), cloud.viewpoint.z());
        out << buf;
        out << "POINTS " << cloud.size() << "\nDATA ascii\n";
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            const auto& p = cloud.points[i];
            // rgb is a packed float; 9 significant digits round-trip float32.
            float packed = std::bit_cast<float>(pack_rgb(p.color));
            std::snprintf(buf, sizeof(buf), "%.6f %.6f %.6f %.9g", p.position.x(), p.position.y(),
                          p.position.z(), static_cast<double>(packed));
            out << buf;
            if (labels) out << ' ' << static_cast<unsigned>((*labels)[i] ? 1 : 0);
            out << '\n';
        }
    }
    if (!out.good()) throw IoFailure("write failure on '" + path + "'");
}

}  // namespace harvest
