#ifndef MCT_CORPUS_HPP
#define MCT_CORPUS_HPP

#include <cstdint>
#include <vector>

#include "mct/dyadic.hpp"

namespace mct {

// Knobs for the random step-function corpus.  Cell indices are drawn from
// [-index_window, index_window) at a grid level drawn from
// [level_lo, level_hi], so supports stay inside a box of side
// 2 * index_window * 2^level_hi.  Coefficient magnitudes are uniform in
// [mag_lo, mag_hi] with a uniform phase (a sign flip when real_only).
struct CorpusOpts {
  int dim = 1;
  int level_lo = -4;
  int level_hi = 2;
  int min_cells = 1;
  int max_cells = 64;
  std::int64_t index_window = 64;
  double mag_lo = 0.25;
  double mag_hi = 4.0;
  bool real_only = false;
  bool nonnegative = false;
};

// Deterministic: the same (seed, count, opts) always yields the same
// functions, independent of platform and thread count.
std::vector<StepFunction> generate_corpus(std::uint64_t seed, int count,
                                          const CorpusOpts& opts = {});

}  // namespace mct

#endif
