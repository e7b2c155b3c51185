#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "dpg/alg_num.hpp"
#include "dpg/family.hpp"
#include "dpg/polar_space.hpp"
#include "dpg/report.hpp"
#include "dpg/w_module.hpp"

namespace dpg {

/// The instance could not be built (bad parameters, too large, ...).
/// Distinct from a failed check.
class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PipelineOptions {
    std::size_t max_vertices = 10000;
    /// Concrete mode: pick (x, C) at random with this seed instead of the
    /// standard pair.
    std::optional<std::uint64_t> base_seed;
};

/// Validates the instance: D >= 3, q0 a prime power, square q0 for the
/// Hermitian families. Throws InstanceError.
void validate_instance(const Instance& inst);

/// Enumerates the graph of a concrete instance. Throws InstanceError.
DPGraph build_graph(const Instance& inst, std::size_t max_vertices);

/// Runs every verification stage in order: geometry and profile (concrete
/// only), W, the four Leonard systems, the nil-DAHA relations and tables,
/// the bridge identities, the realization of the cells by l_i^±, the
/// recurrences, the spectral data and the orthogonality relations.
/// A stage that fails to produce its outputs stops the stages that need
/// them. Throws InstanceError when the instance cannot be built.
/// The concrete module is copied to w_out when given.
Report run_pipeline(const Instance& inst, const PipelineOptions& opts = {}, WModule<AlgNum>* w_out = nullptr);

}  // namespace dpg
