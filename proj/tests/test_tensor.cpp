#include "tensordeg/errors.hpp"
#include "tensordeg/group_spec.hpp"
#include "tensordeg/tensor.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <thread>

using namespace tensordeg;

namespace {

FiniteGroup G(const std::string& spec) { return build_group(parse_group_spec(spec)); }

} // namespace

TEST_CASE("orders of nonabelian tensor squares") {
  // dihedral of order 2m with m even: 8m
  const std::pair<const char*, std::size_t> known[] = {
      {"C1", 1},  {"S3", 6},  {"D8", 32}, {"Q8", 64},  {"A4", 24},
      {"D12", 48}, {"D16", 64}, {"Q16", 64}, {"S4", 48}, {"D10", 10},
  };
  for (const auto& [spec, order] : known) {
    CAPTURE(spec);
    CHECK(tensor_square(G(spec)).order() == order);
  }
}

TEST_CASE("abelian tensor squares agree with bilinear forms") {
  for (const char* spec : {"C2", "C3", "C4", "C6", "C8", "C9", "C2xC2", "C2xC4", "C3xC3",
                           "C2xC2xC2", "C2xC6"}) {
    CAPTURE(spec);
    const FiniteGroup g = G(spec);
    const TensorSquareData t = tensor_square(g);
    const oracle::BilinearResult b = oracle::bilinear_forms(g);
    CHECK(t.order() == b.form_count);
    for (Element x = 0; x < g.order(); ++x) {
      for (Element y = 0; y < g.order(); ++y) {
        CHECK(t.trivial(x, y) == static_cast<bool>(b.trivial_pair[x * g.order() + y]));
      }
    }
  }
}

TEST_CASE("tensor centers and classes") {
  const FiniteGroup s3 = G("S3");
  const TensorSquareData t = tensor_square(s3);
  CHECK(tensor_center(s3, t).is_trivial());
  CHECK(j2_order(s3, t) == 2);

  const FiniteGroup c2 = G("C2");
  const TensorSquareData t2 = tensor_square(c2);
  CHECK(tensor_center(c2, t2).is_trivial());
  CHECK(tensor_class(c2, t2) == 2u);

  const FiniteGroup d8 = G("D8");
  const TensorSquareData t8 = tensor_square(d8);
  CHECK(tensor_center(d8, t8).is_trivial());
  CHECK(tensor_class(d8, t8) == 3u);

  CHECK_FALSE(tensor_class(s3, t).has_value());
  const FiniteGroup c1 = G("C1");
  CHECK(tensor_class(c1, tensor_square(c1)) == 0u);
}

TEST_CASE("tensor upper central terms match the defining condition") {
  for (const char* spec : {"C4", "D8", "Q8", "S3", "A4", "C2xC4", "D12"}) {
    CAPTURE(spec);
    const FiniteGroup g = G(spec);
    const TensorSquareData t = tensor_square(g);
    for (std::size_t n = 1; n <= 3; ++n) {
      CHECK(tensor_upper_central(g, t, n).elements() ==
            tensor_upper_central_direct(g, t, n).elements());
    }
    const auto series = tensor_upper_central_series(g, t);
    for (std::size_t i = 1; i < series.size(); ++i) {
      CHECK(series[i - 1].is_subset_of(series[i]));
    }
  }
}

TEST_CASE("relabeling does not change the tensor square") {
  std::mt19937_64 rng(31337);
  for (const char* spec : {"D8", "Q8", "S3", "C2xC4", "A4"}) {
    CAPTURE(spec);
    const FiniteGroup g = G(spec);
    std::vector<Element> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    const FiniteGroup r = relabel(g, perm);
    const TensorSquareData tg = tensor_square(g);
    const TensorSquareData tr = tensor_square(r);
    CHECK(tg.order() == tr.order());
    for (Element x = 0; x < g.order(); ++x) {
      for (Element y = 0; y < g.order(); ++y) {
        CHECK(tg.trivial(x, y) == tr.trivial(perm[x], perm[y]));
      }
    }
  }
}

TEST_CASE("limit errors name the group") {
  try {
    (void)tensor_square(G("D8"), 10);
    FAIL("expected LimitError");
  } catch (const LimitError& e) {
    CHECK(std::string(e.what()).find("D8") != std::string::npos);
  }
}

TEST_CASE("cache enumerates each table once across threads") {
  TensorSquareCache cache;
  const FiniteGroup q8 = G("Q8");
  std::vector<std::thread> pool;
  std::vector<std::size_t> orders(4);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    pool.emplace_back([&, i] { orders[i] = cache.get(q8).order(); });
  }
  for (auto& th : pool) {
    th.join();
  }
  CHECK(cache.size() == 1);
  for (auto o : orders) {
    CHECK(o == 64);
  }
  const FiniteGroup copy = G("Q8");
  CHECK(&cache.get(copy).parent() == &copy);

  TensorSquareCache tiny(10);
  CHECK_THROWS_AS(tiny.get(q8), LimitError);
  CHECK_THROWS_AS(tiny.get(q8), LimitError);
}
