#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubeknot/grid.hpp"
#include "cubeknot/knot_id.hpp"
#include "cubeknot/laurent.hpp"
#include "cubeknot/legendrian.hpp"
#include "cubeknot/lifting.hpp"

namespace cubeknot {

inline constexpr int kMaxEnumerationSize = 9;
inline constexpr int kRecordSchemaVersion = 1;

/// Conjunction of all set fields.
struct GridFilter {
  int size = 0;
  bool single_component = true;
  std::optional<int> tb;
  std::optional<int> rot;
  Hand hand = Hand::Left;
  std::optional<LaurentPoly> jones_ref;
  std::optional<std::pair<int, int>> writhe_range;  // inclusive
};

/// Stable 64-bit digest of a filter, stored in checkpoints.
std::uint64_t filter_hash(const GridFilter& f);

/// Filter for a Legendrian class at grid size n, including the writhe window
/// tb + |rot| <= w <= tb + n - 1 implied by the cusp and extremum counts.
GridFilter class_filter(const LegendrianClassSpec& spec, int n);

/// Number of permutations of n, i.e. the number of xcol ranks.
std::uint64_t permutation_count(int n);
std::vector<int> permutation_from_rank(int n, std::uint64_t rank);

/// Visits every valid grid of size n passing the filter, in lexicographic
/// order of (xcol, ocol). Only xcol ranks in [rank_lo, rank_hi) are visited.
/// Throws GridError for n outside 1..kMaxEnumerationSize or a size mismatch.
using GridVisitor = std::function<void(const GridDiagram&)>;
std::uint64_t enumerate_grids(int n, const GridFilter& filter, const GridVisitor& visit);
std::uint64_t enumerate_grids(int n, const GridFilter& filter, std::uint64_t rank_lo, std::uint64_t rank_hi,
                              const GridVisitor& visit);

enum class LiftResult { Found, None, Skipped };
const char* to_string(LiftResult r) noexcept;

struct SearchRecord {
  GridDiagram grid;
  int writhe = 0;
  FrontInvariants invariants;
  CornerCensus census;
  LiftResult lift_result = LiftResult::Skipped;
  std::vector<ConfigurationMatch> detector;
  std::optional<CubeDiagram> witness;
  std::optional<bool> bend_identities;  // only for minimal-rotation classes at size p+2
};

/// One JSON object per line, no trailing newline.
std::string record_to_json(const SearchRecord& r);

struct ExperimentOptions {
  std::string out_path;          // JSONL; empty means no output file
  std::string checkpoint_path;   // empty disables checkpoints
  bool resume = false;           // continue from checkpoint_path
  int jobs = 1;
  std::uint64_t checkpoint_every = 64;  // xcol ranks between checkpoints
  std::optional<std::uint64_t> stop_after;  // simulate an interrupt after this many ranks
};

struct ExperimentReport {
  LegendrianClassSpec spec;
  int n = 0;
  std::uint64_t candidates = 0;
  std::uint64_t lifted = 0;
  std::uint64_t detected = 0;
  std::uint64_t detected_and_lifted = 0;
  std::uint64_t identity_checked = 0;
  std::uint64_t identity_failures = 0;
  std::uint64_t ranks_done = 0;
  bool complete = false;
  std::string conclusion;
};

/// Bound phrase: "c_l <= n", "c_l > n" (only at the arc index p+2),
/// "no lift at size n" or "no candidates at size n".
std::string bound_conclusion(const ExperimentReport& r);

std::string report_to_json(const ExperimentReport& r);

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Checkpoint {
  std::uint64_t filter_hash = 0;
  int n = 0;
  std::uint64_t next_rank = 0;
  std::uint64_t jsonl_offset = 0;
  std::uint64_t candidates = 0;
  std::uint64_t lifted = 0;
  std::uint64_t detected = 0;
  std::uint64_t detected_and_lifted = 0;
  std::uint64_t identity_checked = 0;
  std::uint64_t identity_failures = 0;
};

void write_checkpoint(const std::string& path, const Checkpoint& c);
/// Throws CheckpointError for a missing, truncated or corrupt file.
Checkpoint read_checkpoint(const std::string& path);

/// Runs the class filter at size n, lifting every candidate. Records are
/// written in enumeration order regardless of `jobs`.
ExperimentReport run_experiment(const LegendrianClassSpec& spec, int n, const ExperimentOptions& opts = {});

}  // namespace cubeknot
