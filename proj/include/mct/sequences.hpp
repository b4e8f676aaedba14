#ifndef MCT_SEQUENCES_HPP
#define MCT_SEQUENCES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "mct/dyadic.hpp"

namespace mct {

// Finitely supported real sequence over Z^dim.
struct IndexedSeq {
  int dim = 1;
  std::map<Index, double> a;

  double at(const Index& k) const {
    auto it = a.find(k);
    return it == a.end() ? 0.0 : it->second;
  }
};

// Nonincreasing rearrangement of |a| together with the running best-subset
// averages: starstar[n-1] = (1/n) * max over n-element index sets of the sum,
// which for sorted values is the prefix average.
struct Rearranged {
  std::vector<double> star;
  std::vector<double> starstar;
};

Rearranged rearrange(const IndexedSeq& s);

// Discrete Lorentz quasinorm (sum_n (n^{1/p} a*_n)^q / n)^{1/q}; q = inf
// takes sup_n n^{1/p} a*_n.
double lorentz_seq_norm(const Rearranged& r, double p, double q);

IndexedSeq convolve(const IndexedSeq& x, const IndexedSeq& y);

// c_r = 1 / prod_j max(|r_j|, 1) on the box ||r||_inf <= radius.
IndexedSeq inverse_product_seq(int dim, std::int64_t radius);

// Step hyperbolic cross E_m: union over nu_1+...+nu_dim <= m (nu_i >= 1) of
// the blocks floor(2^{nu_i-1}) <= |k_i| < 2^{nu_i}.  Sorted lexicographically.
// m < dim yields the empty set.
std::vector<Index> hyperbolic_cross(int m, int dim);

// Dyadic block index of a coordinate: smallest nu >= 1 with |k| < 2^nu,
// or 0 when k == 0 (such k never belong to a cross).
int cross_block(std::int64_t k);

// |E_m| without materializing the set, as the sum over admissible block
// vectors of the per-block counts.  Cross-checked against the enumerated
// set for small m in the tests.
std::uint64_t hyperbolic_cross_size(int m, int dim);

// c**_N for the inverse-product sequence, N over `ns`.  The enumeration
// radius must be large enough that the smallest kept value still dominates
// anything outside the box; otherwise this throws.
std::vector<double> cstar_star_profile(int dim, const std::vector<std::int64_t>& ns,
                                       std::int64_t radius);

// (1/|omega|)(1/|e|) sum_{t in omega} sum_{m in e} |c_{m-t}|.
double dsk_sample(const IndexedSeq& c, const std::vector<Index>& omega,
                  const std::vector<Index>& e);

// Discrete Hardy inequality data on a window of integer indices:
//   lhs = sum_n (b_n a_n)^p
//   mid = sum_n (b_n sum_{k>=n} a_k)^p        (tail direction)
// or with the head sum_{k<=n} a_k when direction = Head.  cond_constant is
// the observed constant in the summability condition on b that the bounded
// direction requires (sum_{k<=n} b_k <= C b_n for Tail, mirrored for Head).
enum class HardyDirection { Tail, Head };

struct HardyCheck {
  double lhs = 0.0;
  double mid = 0.0;
  double cond_constant = 0.0;
};

HardyCheck hardy_bound_check(const std::vector<double>& a,
                             const std::vector<double>& b, double p,
                             HardyDirection dir);

}  // namespace mct

#endif
