#pragma once

#include <optional>

#include <json.hpp>

#include "tjkernel/graph.hpp"

namespace tjk {

enum class KernelVerdict { TrivialYes, Reduced };

const char* to_string(KernelVerdict v);

struct KernelResult {
  KernelVerdict verdict = KernelVerdict::Reduced;
  /// Present only for yes-verdicts obtained from the C1 route.
  std::optional<ReconfSequence> certificate;
  /// The reduced instance; a copy of the input for TrivialYes.
  Instance instance;
  /// Set when the pipeline gave up on a tighter reduction (undecided search).
  bool non_tight = false;
  nlohmann::json report = nlohmann::json::object();
};

}  // namespace tjk
