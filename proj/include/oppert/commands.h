#pragma once

#include <string>
#include <vector>

#include "oppert/config.h"

namespace oppert {

/// Per-order A_n, W_n, G_n followed by the accumulated W and G.
/// Output is a pure function of its inputs.
std::string render_run(const PerturbationProblem& problem, const SeriesResult& series,
                       OutputFormat format);

/// Energy table: ε⁰, <W_n> per order, and ε. Text or JSON.
std::string render_spectrum(const PerturbationProblem& problem, const SeriesResult& series,
                            const std::vector<StateLabel>& states, const ParamValues& values,
                            OutputFormat format);

}  // namespace oppert
