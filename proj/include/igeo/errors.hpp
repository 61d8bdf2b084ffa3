#pragma once

#include <stdexcept>
#include <string>

namespace igeo {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sample_space
struct NonFiniteIntegrand : Error { using Error::Error; };
struct SpaceMismatch : Error { using Error::Error; };
struct InvalidDescriptor : Error { using Error::Error; };

// expfam
struct PartitionDiverged : Error { using Error::Error; };
struct BadIndex : Error { using Error::Error; };

// fisher_geom
struct DegenerateMetric : Error { using Error::Error; };
struct BadStep : Error { using Error::Error; };

// kahler_tm / l2_embed
struct BaseMismatch : Error { using Error::Error; };

// lie_core
struct DimMismatch : Error { using Error::Error; };
struct UnsupportedStep : Error { using Error::Error; };

// transform_model
struct ActionLeavesGrid : Error { using Error::Error; };
struct NotInAnnihilator : Error { using Error::Error; };

// orbit_method
struct NotInSubalgebra : Error { using Error::Error; };
struct PolarizationNotFound : Error { using Error::Error; };
struct StabilizerObstruction : Error { using Error::Error; };

// cli
struct ConfigError : Error { using Error::Error; };

}  // namespace igeo
