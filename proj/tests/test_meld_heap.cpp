#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "meld_heap.hpp"

using namespace disperse;

TEST_CASE("singletons and ordering") {
  MeldHeap h;
  h.insert(5);
  CHECK(h.size() == 1);
  CHECK(h.find_min() == Int128{5});
  h.insert(3);
  CHECK(h.find_min() == Int128{3});
}

TEST_CASE("duplicates come out once each") {
  MeldHeap h;
  h.insert(2);
  h.insert(7);
  h.insert(2);
  CHECK(h.extract_min() == Int128{2});
  CHECK(h.extract_min() == Int128{2});
  CHECK(h.extract_min() == Int128{7});
  CHECK(h.empty());
}

TEST_CASE("negative keys are fine") {
  MeldHeap h;
  h.insert(-1);
  h.insert(0);
  h.insert(3);
  CHECK(h.find_min() == Int128{-1});
}

TEST_CASE("empty heap operations throw") {
  MeldHeap h;
  CHECK_THROWS_AS(h.find_min(), std::out_of_range);
  CHECK_THROWS_AS(h.extract_min(), std::out_of_range);
}

TEST_CASE("random permutation drains sorted") {
  std::mt19937_64 rng(11);
  std::vector<Int128> keys;
  for (int k = 1; k <= 200; ++k) keys.push_back(k);
  std::shuffle(keys.begin(), keys.end(), rng);
  MeldHeap h;
  for (Int128 k : keys) h.insert(k);
  for (int k = 1; k <= 200; ++k) CHECK(h.extract_min() == Int128{k});
}

TEST_CASE("meld identity and cardinality") {
  MeldHeap empty;
  MeldHeap h;
  h.insert(1);
  h.insert(4);
  h.meld(empty);
  CHECK(h.size() == 2);

  MeldHeap other;
  other.insert(2);
  other.insert(3);
  h.meld(other);
  CHECK(h.size() == 4);
  CHECK(other.empty());
  for (int k = 1; k <= 4; ++k) CHECK(h.extract_min() == Int128{k});
}

TEST_CASE("interleaved stream matches a sorted-list oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    MeldHeap h;
    std::vector<Int128> oracle;  // kept sorted
    for (int op = 0; op < 400; ++op) {
      if (oracle.empty() || rng() % 3 != 0) {
        const Int128 key = static_cast<long long>(rng() % 1000) - 500;
        h.insert(key);
        oracle.insert(std::upper_bound(oracle.begin(), oracle.end(), key), key);
      } else {
        CHECK(h.extract_min() == oracle.front());
        oracle.erase(oracle.begin());
      }
      CHECK(h.size() == oracle.size());
      if (!oracle.empty()) CHECK(h.find_min() == oracle.front());
    }
    while (!oracle.empty()) {
      CHECK(h.extract_min() == oracle.front());
      oracle.erase(oracle.begin());
    }
  }
}

TEST_CASE("random melds drain to the multiset union") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<MeldHeap> heaps;
    std::vector<Int128> all;
    for (int part = 0; part < 8; ++part) {
      heaps.emplace_back();
      const int count = static_cast<int>(rng() % 30);
      for (int k = 0; k < count; ++k) {
        const Int128 key = static_cast<long long>(rng() % 100);
        heaps.back().insert(key);
        all.push_back(key);
      }
    }
    while (heaps.size() > 1) {
      const std::size_t a = rng() % heaps.size();
      std::size_t b = rng() % heaps.size();
      if (a == b) continue;
      heaps[a].meld(heaps[b]);
      heaps.erase(heaps.begin() + static_cast<std::ptrdiff_t>(b));
    }
    std::sort(all.begin(), all.end());
    CHECK(heaps.front().size() == all.size());
    for (Int128 expected : all) CHECK(heaps.front().extract_min() == expected);
  }
}

TEST_CASE("comparison count stays within 4*m*log2(m+2)") {
  auto budget = [](std::uint64_t m) { return 4.0 * static_cast<double>(m) * std::log2(static_cast<double>(m) + 2.0); };

  // adversarial-ish: bulk insert then full drain
  {
    std::uint64_t comparisons = 0;
    MeldHeap h(&comparisons);
    const int m = 20000;
    for (int k = m / 2; k > 0; --k) h.insert(k);
    while (!h.empty()) h.extract_min();
    CHECK(static_cast<double>(comparisons) <= budget(m));
  }

  // random mixes of insert / extract / meld
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    std::uint64_t comparisons = 0;
    MeldHeap main(&comparisons);
    std::uint64_t ops = 0;
    for (int round = 0; round < 300; ++round) {
      switch (rng() % 3) {
        case 0:
          main.insert(static_cast<long long>(rng() % 10000));
          ++ops;
          break;
        case 1:
          if (!main.empty()) main.extract_min();
          ++ops;
          break;
        default: {
          MeldHeap side(&comparisons);
          const int count = static_cast<int>(rng() % 20);
          for (int k = 0; k < count; ++k) {
            side.insert(static_cast<long long>(rng() % 10000));
            ++ops;
          }
          main.meld(side);
          ++ops;
          break;
        }
      }
    }
    CHECK(static_cast<double>(comparisons) <= budget(ops));
  }
}
