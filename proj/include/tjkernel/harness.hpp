#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tjkernel/coloring.hpp"
#include "tjkernel/graph.hpp"
#include "tjkernel/kernel.hpp"
#include "tjkernel/solver.hpp"

namespace tjk {

/// mt19937_64 with its own bounded-integer and real mapping, so streams are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PlanarParams {
  int n = 12;
  int k = 2;
  double keep = 1.0;
  std::uint64_t seed = 1;
};

/// Random stacked triangulation with a constructive rotation system; edges
/// outside a BFS spanning tree survive with probability `keep`.
Instance gen_planar_instance(const PlanarParams& p);

enum class Wiring { Independent, Path, Cycle, SharedKey };
enum class KeyMode { SourceSource, SourceTarget, TargetTarget };

const char* to_string(Wiring w);
const char* to_string(KeyMode m);
Wiring parse_wiring(const std::string& s);
KeyMode parse_key_mode(const std::string& s);

struct GadgetParams {
  bool planar = true;  // otherwise declared K_{3,r}-minor-free, no embedding
  int r = 3;
  std::vector<int> class_sizes{7};
  Wiring wiring = Wiring::Independent;
  /// Plain wirings still chain members of a class; SharedKey uses this for the members.
  Wiring member_wiring = Wiring::Independent;
  KeyMode keys = KeyMode::SourceSource;
  int k_pad = 0;
  int noise = 0;        // extra vertices hanging off one key vertex each
  int extra_edges = 0;  // random edges added inside faces
  /// Explicit classes such as "S0-S1:6,S0-T0:40" (S = source key, T = target
  /// key); overrides class_sizes, keys and the shared hub when nonempty.
  std::string layout;
  /// Chance that a balancing pendant or noise vertex also joins a second
  /// vertex of the anchor's side, which freezes tokens at 1.
  double freeze = 0;
  std::uint64_t seed = 1;
};

/// Key pairs with K_{2,m} fans between them, balancing pendants, padding
/// token edges and optional noise. Ids are shuffled by the seed.
/// Throws GenerationError when the request cannot be embedded.
Instance gen_two_class_gadget(const GadgetParams& p);

enum class KernelMode { General, Planar };
const char* to_string(KernelMode m);

struct TrialOptions {
  KernelMode mode = KernelMode::General;
  int r = 3;
  bool strict = false;
  const ColoringResult* coloring = nullptr;
  SolveLimits limits;
};

struct TrialReport {
  std::string id;
  std::uint64_t seed = 0;
  KernelMode mode = KernelMode::General;
  int n = 0;
  std::size_t m = 0;
  int k = 0;
  std::string kernel_verdict;
  std::string original_verdict;
  std::string kernel_instance_verdict;
  int kernel_n = 0;
  bool certificate_ok = true;
  bool agreement = false;
  bool inconclusive = false;
  std::string error;
  double millis = 0;
  nlohmann::json kernel_report;

  nlohmann::json to_json() const;
};

/// Kernelizes, solves input and kernel, and compares. Never throws for a
/// failed kernel; the error is recorded instead.
TrialReport equivalence_trial(const Instance& inst, const TrialOptions& opts);

struct ManifestEntry {
  std::string id;
  KernelMode mode = KernelMode::General;
  int r = 3;
  bool strict = false;
  bool declare_k3r = false;  // relabel a planar instance as K_{3,r}-minor-free
  std::string generator;     // "planar" or "gadget"
  PlanarParams planar;
  GadgetParams gadget;
};

/// One entry per non-comment line: `<id> key=value ...`.
std::vector<ManifestEntry> parse_manifest(std::istream& in);
Instance generate(const ManifestEntry& e);
std::uint64_t entry_seed(const ManifestEntry& e);

/// Runs all trials on `threads` workers; results follow manifest order.
std::vector<TrialReport> run_manifest(const std::vector<ManifestEntry>& entries, int threads,
                                      const SolveLimits& limits = {});

/// Counts, class histogram and Euler margins for an instance.
nlohmann::json instance_stats(const Instance& inst);

}  // namespace tjk
