#include "crossnest/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "crossnest/error.hpp"

namespace crossnest {

namespace {

void check_enumeration_size(std::size_t n) {
  if (n < 1 || n > max_enumeration_n) {
    throw InvalidInput("n = " + std::to_string(n) + " outside enumerable range 1.." +
                       std::to_string(max_enumeration_n));
  }
}

std::size_t max_chain(std::size_t n) { return (n + 1) / 2; }

}  // namespace

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw InvalidInput("factorial overflows 64 bits beyond 20");
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

Permutation unrank_permutation(std::size_t n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw InvalidInput("rank out of range");
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{1});
  std::vector<Vertex> image;
  image.reserve(n);
  for (std::size_t remaining = n; remaining > 0; --remaining) {
    const std::uint64_t block = factorial(remaining - 1);
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    image.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(image));
}

PermutationStream::PermutationStream(std::size_t n) : PermutationStream(n, 0, 0) {
  remaining_ = factorial(n);
}

PermutationStream::PermutationStream(std::size_t n, std::uint64_t first_rank, std::uint64_t count)
    : remaining_(count) {
  check_enumeration_size(n);
  const std::uint64_t total = factorial(n);
  if (first_rank > total || count > total - first_rank) {
    throw InvalidInput("rank block exceeds n!");
  }
  const std::uint64_t start = first_rank < total ? first_rank : 0;
  const Permutation p = unrank_permutation(n, start);
  current_.assign(p.image().begin(), p.image().end());
}

std::optional<Permutation> PermutationStream::next() {
  if (remaining_ == 0) return std::nullopt;
  Permutation p(current_);
  --remaining_;
  if (remaining_ > 0) std::next_permutation(current_.begin(), current_.end());
  return p;
}

PermutationStream iterate_permutations(std::size_t n) { return PermutationStream(n); }

std::uint64_t DistributionTable::total() const {
  std::uint64_t s = 0;
  for (const auto& [key, c] : entries) s += c;
  return s;
}

std::uint64_t DistributionTable::count(const TableKey& key) const {
  const auto it = entries.find(key);
  return it == entries.end() ? 0 : it->second;
}

void DistributionTable::merge(const DistributionTable& other) {
  for (const auto& [key, c] : other.entries) entries[key] += c;
}

DistributionTable tally_permutations(std::size_t n, const KeyFunction& key, unsigned jobs) {
  check_enumeration_size(n);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t total = factorial(n);
  const std::uint64_t blocks = std::min<std::uint64_t>(total, std::uint64_t{jobs} * 8);
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(jobs, blocks));

  DistributionTable result{n, {}};
  std::mutex merge_mutex;
  std::atomic<std::uint64_t> next_block{0};
  const auto work = [&] {
    DistributionTable local{n, {}};
    for (std::uint64_t b = next_block++; b < blocks; b = next_block++) {
      const std::uint64_t first = total * b / blocks;
      const std::uint64_t last = total * (b + 1) / blocks;
      PermutationStream stream(n, first, last - first);
      while (auto p = stream.next()) ++local.entries[key(*p)];
    }
    const std::lock_guard lock(merge_mutex);
    result.merge(local);
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (result.total() != total) throw InternalError("tally does not sum to n!");
  return result;
}

DistributionTable crossing_distribution(std::size_t n, ChainKind stat, unsigned jobs) {
  return tally_permutations(
      n,
      [stat](const Permutation& p) {
        return TableKey{{}, stat == ChainKind::crossing ? crossing_number(p) : nesting_number(p), {}};
      },
      jobs);
}

DistributionTable joint_distribution(std::size_t n, bool refine, unsigned jobs) {
  return tally_permutations(
      n,
      [refine](const Permutation& p) {
        return TableKey{refine ? degree_class_string(p) : std::string{}, crossing_number(p),
                        nesting_number(p)};
      },
      jobs);
}

SymmetryReport check_symmetry(const DistributionTable& joint) {
  SymmetryReport report;
  for (const auto& [key, c] : joint.entries) {
    if (!key.j) throw InvalidInput("symmetry check needs a joint (Cr, Ne) table");
    const TableKey mirrored{key.degree_class, *key.j, key.i};
    if (joint.count(mirrored) != c) {
      report.passed = false;
      report.violations.push_back(key);
    }
  }
  return report;
}

SymmetryReport verify_symmetry(std::size_t n, bool refine, unsigned jobs) {
  return check_symmetry(joint_distribution(n, refine, jobs));
}

std::uint64_t max_nesting_count(std::size_t n, unsigned jobs) {
  return crossing_distribution(n, ChainKind::nesting, jobs).count({{}, max_chain(n), {}});
}

std::uint64_t max_crossing_count(std::size_t n, unsigned jobs) {
  return crossing_distribution(n, ChainKind::crossing, jobs).count({{}, max_chain(n), {}});
}

std::uint64_t max_nesting_closed_form(std::size_t n) {
  if (n == 0) throw InvalidInput("maximum nesting count needs n >= 1");
  const std::size_t m = n / 2;
  if (n % 2 == 1) return factorial(m);
  return 2 * factorial(m + 1) - factorial(m - 1) - 1;
}

std::uint64_t catalan(std::size_t n) {
  if (n > 36) throw InvalidInput("catalan number overflows 64 bits beyond n = 36");
  // binom(2n, n) / (n + 1), accumulated as binom(n + k, k) for k = 1..n.
  __extension__ using wide = unsigned __int128;
  wide binom = 1;
  for (std::size_t k = 1; k <= n; ++k) binom = binom * (n + k) / k;
  return static_cast<std::uint64_t>(binom / (n + 1));
}

SetPartition::SetPartition(std::size_t n, std::vector<std::vector<Vertex>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> seen(n_ + 1, false);
  std::size_t covered = 0;
  for (auto& block : blocks_) {
    if (block.empty()) throw InvalidInput("set partition has an empty block");
    std::sort(block.begin(), block.end());
    for (const Vertex v : block) {
      if (v < 1 || v > n_ || seen[v]) throw InvalidInput("set partition blocks overlap or leave range");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n_) throw InvalidInput("set partition does not cover 1..n");
  std::sort(blocks_.begin(), blocks_.end());
}

bool is_noncrossing(const SetPartition& p) {
  std::vector<std::size_t> block_of(p.n() + 1);
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    for (const Vertex v : p.blocks()[b]) block_of[v] = b;
  }
  const std::size_t n = p.n();
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      for (Vertex c = b + 1; c <= n; ++c)
        for (Vertex d = c + 1; d <= n; ++d)
          if (block_of[a] == block_of[c] && block_of[b] == block_of[d] && block_of[a] != block_of[b])
            return false;
  return true;
}

std::vector<SetPartition> set_partitions(std::size_t n) {
  std::vector<SetPartition> out;
  std::vector<std::size_t> growth(n, 0);
  const auto emit = [&] {
    std::vector<std::vector<Vertex>> blocks;
    for (std::size_t i = 0; i < n; ++i) {
      if (growth[i] == blocks.size()) blocks.emplace_back();
      blocks[growth[i]].push_back(i + 1);
    }
    out.emplace_back(n, std::move(blocks));
  };
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      emit();
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      growth[i] = b;
      extend(i + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) {
    out.emplace_back(0, std::vector<std::vector<Vertex>>{});
  } else {
    growth[0] = 0;
    extend(1, 1);
  }
  return out;
}

SetPartition noncrossing_to_partition(const Permutation& perm) {
  if (crossing_number(perm) != 1) {
    throw InvalidInput("permutation " + to_string(perm) + " has a 2-crossing");
  }
  const std::size_t n = perm.size();
  std::vector<Vertex> root(n + 1);
  std::iota(root.begin(), root.end(), Vertex{0});
  const auto find = [&root](Vertex v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const Arc& a : arc_diagram(perm).lower) root[find(a.right)] = find(a.left);
  std::vector<std::vector<Vertex>> by_root(n + 1);
  for (Vertex v = 1; v <= n; ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<Vertex>> blocks;
  for (auto& b : by_root) {
    if (!b.empty()) blocks.push_back(std::move(b));
  }
  return SetPartition(n, std::move(blocks));
}

}  // namespace crossnest
