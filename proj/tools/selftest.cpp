#include "selftest.hpp"

#include <functional>
#include <string>

#include "daff/element_io.hpp"
#include "daff/oracle.hpp"
#include "daff/sampling.hpp"

namespace daff::cli {

namespace {

struct Suite {
  std::string name;
  std::function<int(sampling::Rng&)> run;  // returns mismatches
};

std::vector<DoubleAffineRoot> cocover_roots(const SemigroupElement& x) {
  std::vector<DoubleAffineRoot> out;
  for (const auto& c : cocovers(x, CocoverStrategy::kCorners)) out.push_back(c.alpha);
  return out;
}

}  // namespace

int run_selftest(std::uint64_t seed, std::ostream& out) {
  auto a1 = RootSystem::build('A', 1);
  auto a2 = RootSystem::build('A', 2);
  const oracle::ScanWindow wide{-25, 25, 0, 40};

  std::vector<Suite> suites{
      {"affine length vs word search",
       [&](sampling::Rng& rng) {
         int bad = 0;
         for (int k = 0; k < 40; ++k) {
           const RootSystem& sys = k % 2 ? *a2 : *a1;
           AffineWeylElement w = sampling::random_affine(sys, rng, 5);
           if (oracle::aff_length_bfs(w, 6) != aff_length(w)) ++bad;
         }
         return bad;
       }},
      {"length difference sets vs window scan",
       [&](sampling::Rng& rng) {
         int bad = 0;
         for (int k = 0; k < 20; ++k) {
           const RootSystem& sys = k % 2 ? *a2 : *a1;
           SemigroupElement x = sampling::random_element(sys, rng, {0, 2, 2, 2});
           auto alpha = sampling::random_reflection_root(x, rng, false);
           if (!alpha) continue;
           if (length_diff_set(x, *alpha) != oracle::length_diff_scan(x, *alpha, wide)) ++bad;
         }
         return bad;
       }},
      {"cocovers vs brute force",
       [&](sampling::Rng& rng) {
         int bad = 0;
         for (int k = 0; k < 10; ++k) {
           const RootSystem& sys = k % 2 ? *a2 : *a1;
           SemigroupElement x = sampling::random_element(sys, rng, {0, 2, 2, 2});
           if (cocover_roots(x) != oracle::cocovers_scan(x, wide)) ++bad;
         }
         return bad;
       }},
      {"covers vs brute force",
       [&](sampling::Rng& rng) {
         int bad = 0;
         for (int k = 0; k < 10; ++k) {
           const RootSystem& sys = k % 2 ? *a2 : *a1;
           SemigroupElement x = sampling::random_element(sys, rng, {0, 2, 2, 2});
           std::vector<DoubleAffineRoot> fast;
           for (const auto& c : covers(x)) fast.push_back(c.beta);
           if (fast != oracle::covers_scan(x, wide)) ++bad;
         }
         return bad;
       }},
  };

  int total = 0;
  for (std::size_t k = 0; k < suites.size(); ++k) {
    sampling::Rng rng(seed + k);
    int bad = suites[k].run(rng);
    total += bad;
    out << (bad ? "FAIL " : "ok   ") << suites[k].name;
    if (bad) out << " (" << bad << " mismatches)";
    out << '\n';
  }
  return total;
}

}  // namespace daff::cli
