#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gz/higher.hpp"
#include "gz/types.hpp"

namespace gz {

// Per-call options a registry evaluator may consume; which fields matter
// depends on the entry (mellin reads spec, bendersky reads level, the
// gamma constant reads method).
struct EvalOptions {
    SeriesConfig series;
    QuadratureConfig quad;
    RationalFunctionSpec spec;
    bool has_spec = false;
    int level = 0;
    std::string method = "limit";
};

struct RegistryEntry {
    std::string name;
    std::string summary;
    bool real_domain = false;  // defined only for real arguments
    std::function<EvalResult(cplx, const EvalOptions&)> eval;
};

// Every function reachable from the command line, keyed by name.
const std::vector<RegistryEntry>& registry();

// nullptr when the name is unknown.
const RegistryEntry* find_registry(const std::string& name);

}  // namespace gz
