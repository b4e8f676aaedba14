#include "mct/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mct/mathutil.hpp"

namespace mct {

std::vector<StepFunction> generate_corpus(std::uint64_t seed, int count,
                                          const CorpusOpts& opts) {
  if (count < 1) throw config_error("generate_corpus: count must be >= 1");
  if (opts.dim != 1 && opts.dim != 2)
    throw config_error("generate_corpus: dim must be 1 or 2");
  if (opts.level_hi < opts.level_lo)
    throw config_error("generate_corpus: empty level range");
  if (opts.min_cells < 1 || opts.max_cells < opts.min_cells)
    throw config_error("generate_corpus: bad cell count range");
  if (opts.index_window < 1)
    throw config_error("generate_corpus: index window must be >= 1");
  if (!(opts.mag_lo > 0) || opts.mag_hi < opts.mag_lo)
    throw config_error("generate_corpus: bad magnitude range");
  std::int64_t slots = 2 * opts.index_window;
  double capacity = double(slots) * (opts.dim == 2 ? double(slots) : 1.0);
  if (double(opts.max_cells) > capacity)
    throw config_error("generate_corpus: more cells than grid slots");

  Rng rng(seed);
  std::vector<StepFunction> out;
  out.reserve(std::size_t(count));
  for (int i = 0; i < count; ++i) {
    int level = int(rng.uniform_int(opts.level_lo, opts.level_hi));
    int want = int(rng.uniform_int(opts.min_cells, opts.max_cells));
    std::set<Index> used;
    while (int(used.size()) < want) {
      Index k{rng.uniform_int(-opts.index_window, opts.index_window - 1), 0};
      if (opts.dim == 2)
        k[1] = rng.uniform_int(-opts.index_window, opts.index_window - 1);
      used.insert(k);
    }
    std::vector<Cell> cells;
    cells.reserve(used.size());
    for (const Index& k : used) {
      double mag = rng.uniform(opts.mag_lo, opts.mag_hi);
      cplx c;
      if (opts.nonnegative) {
        c = mag;
      } else if (opts.real_only) {
        c = (rng.next() & 1) ? mag : -mag;
      } else {
        double phase = rng.uniform(0.0, 2.0 * M_PI);
        c = std::polar(mag, phase);
      }
      cells.push_back({k, c});
    }
    out.push_back(StepFunction::from_cells(opts.dim, level, std::move(cells)));
  }
  return out;
}

}  // namespace mct
