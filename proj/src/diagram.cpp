#include "foil/diagram.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace foil {

namespace {

std::array<std::uint32_t, 4> sorted_ends(const std::array<EndPair, 2>& pairing) {
  std::array<std::uint32_t, 4> ends = {pairing[0].first.encode(), pairing[0].second.encode(),
                                       pairing[1].first.encode(), pairing[1].second.encode()};
  std::sort(ends.begin(), ends.end());
  return ends;
}

// Pair as an unordered edge, pairing as an unordered pair of edges.
std::array<std::uint64_t, 2> pairing_key(const std::array<EndPair, 2>& pairing) {
  auto edge = [](const EndPair& p) {
    std::uint64_t a = p.first.encode();
    std::uint64_t b = p.second.encode();
    if (a > b) std::swap(a, b);
    return (a << 32) | b;
  };
  std::array<std::uint64_t, 2> key = {edge(pairing[0]), edge(pairing[1])};
  if (key[0] > key[1]) std::swap(key[0], key[1]);
  return key;
}

}  // namespace

PlanarDiagram::PlanarDiagram(std::uint32_t arc_count, std::vector<Crossing> crossings,
                             std::uint32_t base_loops)
    : arc_count_(arc_count), crossings_(std::move(crossings)), base_loops_(base_loops) {
  if (arc_count_ == 0 && crossings_.empty() && base_loops_ == 0) {
    throw std::invalid_argument("diagram must contain at least one curve");
  }
  std::vector<unsigned> slot_uses(2 * arc_count_, 0);
  for (const Crossing& crossing : crossings_) {
    const auto ends_a = sorted_ends(crossing.pairing_a);
    const auto ends_b = sorted_ends(crossing.pairing_b);
    if (ends_a != ends_b) {
      throw std::invalid_argument("crossing pairings must cover the same four arc ends");
    }
    if (ends_a[0] == ends_a[1] || ends_a[1] == ends_a[2] || ends_a[2] == ends_a[3]) {
      throw std::invalid_argument("crossing must join four distinct arc ends");
    }
    if (pairing_key(crossing.pairing_a) == pairing_key(crossing.pairing_b)) {
      throw std::invalid_argument("the two smoothings of a crossing must differ");
    }
    for (std::uint32_t end : ends_a) {
      if (end >= 2 * arc_count_) throw std::invalid_argument("arc end out of range");
      ++slot_uses[end];
    }
  }
  for (unsigned uses : slot_uses) {
    if (uses != 1) {
      throw std::invalid_argument("every arc end must occupy exactly one crossing slot");
    }
  }
}

PlanarDiagram build_foil(unsigned n) {
  if (n == 0) return PlanarDiagram(0, {}, 2);
  // Two strands; gap i holds arcs left = 2i and right = 2i+1, running from
  // crossing i (tails) to crossing i+1 mod n (heads).
  std::vector<Crossing> crossings;
  crossings.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t prev = (i + n - 1) % n;
    const std::uint32_t left_in = 2 * prev, right_in = 2 * prev + 1;
    const std::uint32_t left_out = 2 * i, right_out = 2 * i + 1;
    Crossing c;
    // A-split caps the incoming pair and cups the outgoing pair.
    c.pairing_a = {EndPair{head_of(left_in), head_of(right_in)},
                   EndPair{tail_of(left_out), tail_of(right_out)}};
    // B-split lets both strands pass through.
    c.pairing_b = {EndPair{head_of(left_in), tail_of(left_out)},
                   EndPair{head_of(right_in), tail_of(right_out)}};
    crossings.push_back(c);
  }
  return PlanarDiagram(2 * n, std::move(crossings), 0);
}

PlanarDiagram build_twist_loop(unsigned n) {
  if (n == 0) return PlanarDiagram(0, {}, 1);
  // Stem arc 2i runs from crossing i to crossing i+1 mod n; kink arc 2i+1
  // leaves and re-enters crossing i.
  std::vector<Crossing> crossings;
  crossings.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t stem_in = 2 * ((i + n - 1) % n);
    const std::uint32_t stem_out = 2 * i;
    const std::uint32_t kink = 2 * i + 1;
    Crossing c;
    // A-split pinches the kink off as its own circle.
    c.pairing_a = {EndPair{head_of(stem_in), tail_of(stem_out)},
                   EndPair{tail_of(kink), head_of(kink)}};
    // B-split routes the strand through the kink.
    c.pairing_b = {EndPair{head_of(stem_in), tail_of(kink)},
                   EndPair{head_of(kink), tail_of(stem_out)}};
    crossings.push_back(c);
  }
  return PlanarDiagram(2 * n, std::move(crossings), 0);
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;

  explicit UnionFind(std::size_t size) : parent(size) { reset(); }

  void reset() {
    for (std::uint32_t i = 0; i < parent.size(); ++i) parent[i] = i;
  }

  std::uint32_t find(std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }

  unsigned component_count() {
    unsigned count = 0;
    for (std::uint32_t i = 0; i < parent.size(); ++i) {
      if (find(i) == i) ++count;
    }
    return count;
  }
};

// Crossing smoothings with ends pre-encoded for the enumeration loops.
struct FlatCrossing {
  std::array<std::array<std::uint32_t, 4>, 2> pairs;  // [digit][pair0.a, pair0.b, pair1.a, pair1.b]
};

std::vector<FlatCrossing> flatten(const PlanarDiagram& diagram) {
  std::vector<FlatCrossing> flat;
  flat.reserve(diagram.crossing_count());
  for (const Crossing& c : diagram.crossings()) {
    FlatCrossing fc;
    fc.pairs[0] = {c.pairing_a[0].first.encode(), c.pairing_a[0].second.encode(),
                   c.pairing_a[1].first.encode(), c.pairing_a[1].second.encode()};
    fc.pairs[1] = {c.pairing_b[0].first.encode(), c.pairing_b[0].second.encode(),
                   c.pairing_b[1].first.encode(), c.pairing_b[1].second.encode()};
    flat.push_back(fc);
  }
  return flat;
}

// Arc edges (tail-head of each arc) never change across words; flatten them
// into a reusable parent snapshot.
std::vector<std::uint32_t> base_parents(const PlanarDiagram& diagram) {
  UnionFind dsu(2 * diagram.arc_count());
  for (std::uint32_t arc = 0; arc < diagram.arc_count(); ++arc) {
    dsu.unite(2 * arc, 2 * arc + 1);
  }
  for (std::uint32_t v = 0; v < dsu.parent.size(); ++v) dsu.parent[v] = dsu.find(v);
  return dsu.parent;
}

unsigned components_of_index(std::uint64_t word_index, const std::vector<FlatCrossing>& flat,
                             const std::vector<std::uint32_t>& base, UnionFind& dsu) {
  dsu.parent = base;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const auto& ends = flat[i].pairs[(word_index >> i) & 1];
    dsu.unite(ends[0], ends[1]);
    dsu.unite(ends[2], ends[3]);
  }
  return dsu.component_count();
}

void check_cap(const PlanarDiagram& diagram, const EnumerationOptions& options) {
  if (diagram.crossing_count() > options.max_crossings) {
    throw std::length_error("crossing count " + std::to_string(diagram.crossing_count()) +
                            " exceeds the enumeration cap of " +
                            std::to_string(options.max_crossings));
  }
}

SplitWord word_of_index(std::uint64_t word_index, std::uint32_t length) {
  std::string digits(length, '0');
  for (std::uint32_t i = 0; i < length; ++i) {
    if ((word_index >> i) & 1) digits[i] = '1';
  }
  return BinaryWord::parse(digits);
}

}  // namespace

unsigned count_components(const PlanarDiagram& diagram, const SplitWord& split) {
  if (split.length() != diagram.crossing_count()) {
    throw std::invalid_argument("split word length " + std::to_string(split.length()) +
                                " does not match crossing count " +
                                std::to_string(diagram.crossing_count()));
  }
  UnionFind dsu(2 * diagram.arc_count());
  for (std::uint32_t arc = 0; arc < diagram.arc_count(); ++arc) {
    dsu.unite(2 * arc, 2 * arc + 1);
  }
  for (std::uint32_t i = 0; i < diagram.crossing_count(); ++i) {
    const Crossing& c = diagram.crossings()[i];
    const auto& pairing = split[i] == '0' ? c.pairing_a : c.pairing_b;
    dsu.unite(pairing[0].first.encode(), pairing[0].second.encode());
    dsu.unite(pairing[1].first.encode(), pairing[1].second.encode());
  }
  return dsu.component_count() + diagram.base_loops();
}

Polynomial state_sum(const PlanarDiagram& diagram, const EnumerationOptions& options) {
  check_cap(diagram, options);
  const std::uint32_t n = diagram.crossing_count();
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::size_t max_components = diagram.arc_count() + diagram.base_loops() + 1;

  const auto flat = flatten(diagram);
  const auto base = base_parents(diagram);

  auto count_range = [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& counts) {
    UnionFind dsu(2 * diagram.arc_count());
    for (std::uint64_t m = begin; m < end; ++m) {
      counts[components_of_index(m, flat, base, dsu) + diagram.base_loops()] += 1;
    }
  };

  unsigned threads = options.threads;
  if (threads == 0) {
    threads = n >= 18 ? std::thread::hardware_concurrency() : 1;  // not worth spawning below that
    if (threads == 0) threads = 1;
  }
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::vector<std::vector<std::uint64_t>> counts(threads,
                                                 std::vector<std::uint64_t>(max_components + 1));
  if (threads == 1) {
    count_range(0, total, counts[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = total / threads * t;
      const std::uint64_t end = t + 1 == threads ? total : total / threads * (t + 1);
      workers.emplace_back([&, t, begin, end] { count_range(begin, end, counts[t]); });
    }
    for (std::thread& w : workers) w.join();
  }

  std::vector<BigInt> coefficients(max_components + 1);
  for (const auto& local : counts) {
    for (std::size_t k = 0; k <= max_components; ++k) coefficients[k] += local[k];
  }
  return Polynomial(std::move(coefficients));
}

WordSet states_by_components(const PlanarDiagram& diagram, unsigned k,
                             const EnumerationOptions& options) {
  check_cap(diagram, options);
  const std::uint32_t n = diagram.crossing_count();
  const std::uint64_t total = std::uint64_t{1} << n;
  const auto flat = flatten(diagram);
  const auto base = base_parents(diagram);

  std::vector<BinaryWord> matches;
  UnionFind dsu(2 * diagram.arc_count());
  for (std::uint64_t m = 0; m < total; ++m) {
    if (components_of_index(m, flat, base, dsu) + diagram.base_loops() == k) {
      matches.push_back(word_of_index(m, n));
    }
  }
  return WordSet(std::move(matches));
}

}  // namespace foil
