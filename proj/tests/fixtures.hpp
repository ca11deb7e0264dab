#pragma once

#include "pivotal/lattice.hpp"
#include "pivotal/sort.hpp"

#include <string>
#include <vector>

namespace fixture {

using pivotal::RawLattice;
using pivotal::Sort;

inline RawLattice chain(std::size_t m) {
  RawLattice raw;
  for (std::size_t i = 0; i < m; ++i) raw.names.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < m; ++i) raw.leq.emplace_back(raw.names[i], raw.names[i + 1]);
  raw.bottom = raw.names.front();
  raw.top = raw.names.back();
  return raw;
}

// {0, m, 1}
inline RawLattice chain3() { return RawLattice{{"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}, "0", "1"}; }

// The four-element Boolean lattice 0 < a, b < 1.
inline RawLattice square() {
  return RawLattice{{"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}, "0", "1"};
}

inline RawLattice diamond() {
  return RawLattice{{"0", "a", "b", "c", "1"},
                    {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}},
                    "0",
                    "1"};
}

inline RawLattice pentagon() {
  return RawLattice{{"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}, "0", "1"};
}

inline Sort lattice(const RawLattice& raw) { return pivotal::make_lattice_sort(raw); }

// Every validated lattice with at most four elements, up to isomorphism.
inline std::vector<Sort> small_lattices() {
  return {lattice(chain(2)), lattice(chain3()), lattice(chain(4)), lattice(square())};
}

}  // namespace fixture
