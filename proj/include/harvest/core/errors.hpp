#pragma once

#include <stdexcept>
#include <string>

namespace harvest {

/// Base class for all domain errors raised by the pipeline.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Cloud IO
struct IoFailure : Error { using Error::Error; };
struct MalformedHeader : Error { using Error::Error; };
struct InconsistentRowCount : Error { using Error::Error; };
struct NonFiniteValue : Error { using Error::Error; };
struct EmptyCloud : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };

// Perception
struct DegenerateSamples : Error { using Error::Error; };
struct NoClusters : Error { using Error::Error; };

// Pose estimation
struct DegenerateCluster : Error { using Error::Error; };
struct NoValidNormals : Error { using Error::Error; };
struct NoCandidatesAboveFloor : Error { using Error::Error; };

// Planning / FSM
struct InvalidPattern : Error { using Error::Error; };
struct IllegalTransition : Error { using Error::Error; };

// Simulation / reporting
struct InvalidSpec : Error { using Error::Error; };
struct EmptyRecords : Error { using Error::Error; };

// Configuration
struct UnknownKey : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };

}  // namespace harvest
