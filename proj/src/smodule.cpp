#include "covermotive/smodule.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "covermotive/errors.hpp"

namespace covermotive {

void SModClass::add(int degree, ClassTuple evals, ClassTuple roots, const MotivePoly& cls) {
  if (degree < 0) throw Error(ErrorKind::IndexOutOfRange, "negative degree");
  if (!evals.empty() && static_cast<int>(evals.size()) != degree)
    throw Error(ErrorKind::MissingEvaluations, "evaluation tuple length differs from the degree");
  if (cls.is_zero()) return;
  auto& part = parts_[degree];
  auto [it, inserted] = part.try_emplace(GeneratorKey{std::move(evals), std::move(roots)}, cls);
  if (!inserted) {
    it->second += cls;
    if (it->second.is_zero()) part.erase(it);
  }
  if (part.empty()) parts_.erase(degree);
}

std::vector<AtomicGenerator> SModClass::generators(int degree) const {
  std::vector<AtomicGenerator> out;
  if (const Part* p = part(degree))
    for (const auto& [key, cls] : *p) out.push_back(AtomicGenerator{key.evals, key.roots, cls});
  return out;
}

const SModClass::Part* SModClass::part(int degree) const {
  auto it = parts_.find(degree);
  return it == parts_.end() ? nullptr : &it->second;
}

std::vector<int> SModClass::support() const {
  std::vector<int> out;
  for (const auto& [degree, part] : parts_) out.push_back(degree);
  return out;
}

SModClass& SModClass::operator+=(const SModClass& other) {
  for (const auto& [degree, part] : other.parts_)
    for (const auto& [key, cls] : part) add(degree, key.evals, key.roots, cls);
  return *this;
}

SModClass& SModClass::operator-=(const SModClass& other) {
  for (const auto& [degree, part] : other.parts_)
    for (const auto& [key, cls] : part) add(degree, key.evals, key.roots, -cls);
  return *this;
}

SModClass SModClass::truncated(int from) const {
  SModClass out;
  for (const auto& [degree, part] : parts_)
    if (degree < from) out.parts_[degree] = part;
  return out;
}

std::vector<std::vector<int>> shuffles(std::span<const int> block_sizes) {
  const int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<bool> used(n + 1, false);
  // Fill blocks left to right with increasing labels.
  auto fill = [&](auto&& self, std::size_t block, int filled_in_block, int last) -> void {
    if (block == block_sizes.size()) {
      out.push_back(current);
      return;
    }
    if (filled_in_block == block_sizes[block]) {
      self(self, block + 1, 0, 0);
      return;
    }
    for (int label = last + 1; label <= n; ++label) {
      if (used[label]) continue;
      used[label] = true;
      current.push_back(label);
      self(self, block, filled_in_block + 1, label);
      current.pop_back();
      used[label] = false;
    }
  };
  fill(fill, 0, 0, 0);
  return out;
}

std::optional<std::vector<int>> fixing_permutation(std::span<const ClassId> root_evals,
                                                   std::span<const int> block_sizes, std::span<const int> shuffle) {
  const std::size_t m = block_sizes.size();
  std::vector<std::size_t> start(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) start[i + 1] = start[i] + block_sizes[i];
  auto block = [&](std::size_t i) {
    std::vector<int> labels(shuffle.begin() + start[i], shuffle.begin() + start[i + 1]);
    std::sort(labels.begin(), labels.end());
    return labels;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (root_evals[i] == root_evals[j] && block_sizes[i] == block_sizes[j] && block(i) == block(j)) {
        std::vector<int> tau(m);
        std::iota(tau.begin(), tau.end(), 0);
        std::swap(tau[i], tau[j]);
        return tau;
      }
  return std::nullopt;
}

namespace {

std::vector<int> block_sizes_of(const Generator& gen) {
  std::vector<int> ks;
  ks.reserve(gen.slots.size());
  for (const auto& s : gen.slots) ks.push_back(s.k);
  return ks;
}

std::string describe(const std::vector<int>& tau) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < tau.size(); ++i) out << (i ? "," : "") << tau[i];
  out << ']';
  return out.str();
}

void validate_shape(const Generator& gen) {
  if (gen.root_evals.size() != gen.slots.size())
    throw Error(ErrorKind::IndexOutOfRange, "root evaluations and slots differ in number");
  int total = 0;
  for (const auto& s : gen.slots) total += s.k;
  if (total != gen.degree || static_cast<int>(gen.shuffle.size()) != gen.degree)
    throw Error(ErrorKind::IndexOutOfRange, "block sizes do not sum to the degree");
}

}  // namespace

void check_free(const Generator& gen) {
  validate_shape(gen);
  const auto ks = block_sizes_of(gen);
  if (auto tau = fixing_permutation(gen.root_evals, ks, gen.shuffle))
    throw NonFreeActionError("slot permutation " + describe(*tau) + " fixes the index data", std::move(*tau));
}

Generator act_on_slots(std::span<const int> tau, const Generator& gen) {
  validate_shape(gen);
  const std::size_t m = gen.slots.size();
  if (tau.size() != m) throw Error(ErrorKind::IndexOutOfRange, "permutation size differs from valence");
  std::vector<std::size_t> start(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) start[i + 1] = start[i] + gen.slots[i].k;

  Generator out = gen;
  std::vector<std::vector<int>> blocks(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto target = static_cast<std::size_t>(tau[i]);
    out.root_evals[target] = gen.root_evals[i];
    out.slots[target] = gen.slots[i];
    blocks[target].assign(gen.shuffle.begin() + start[i], gen.shuffle.begin() + start[i + 1]);
    std::sort(blocks[target].begin(), blocks[target].end());
  }
  out.shuffle.clear();
  for (const auto& b : blocks) out.shuffle.insert(out.shuffle.end(), b.begin(), b.end());
  return out;
}

MotivePoly sm_quotient(std::span<const Generator> gens, int m) {
  MotivePoly sum;
  for (const auto& gen : gens) {
    if (static_cast<int>(gen.slots.size()) != m) throw Error(ErrorKind::IndexOutOfRange, "generator valence differs");
    check_free(gen);
    MotivePoly term = gen.root_class;
    for (const auto& s : gen.slots) term *= s.tail_class;
    sum += term * BigInt(gen.weight);
  }
  return divide_exact(sum, factorial(m));
}

SModClass degree_zero_unit() {
  SModClass out;
  out.add(0, {}, {}, 1);
  return out;
}

SModClass unit_I1(const FiniteGroup& group) {
  SModClass out;
  for (int c = 0; c < group.class_count(); ++c) {
    const auto id = static_cast<ClassId>(c);
    out.add(1, {id}, {id}, 1);
  }
  return out;
}

SModClass unit_I2(const FiniteGroup& group) {
  SModClass out;
  for (int c = 0; c < group.class_count(); ++c) {
    const auto id = static_cast<ClassId>(c);
    out.add(2, {id, group.iota(id)}, {}, 1);
  }
  return out;
}

ClassId unit_I2_swap(const FiniteGroup& group, ClassId c) { return group.iota(c); }

SModClass shift_root(const SModClass& x, const FiniteGroup& group) {
  SModClass out;
  for (int degree : x.support()) {
    if (degree == 0) continue;
    for (const auto& [key, cls] : *x.part(degree)) {
      if (static_cast<int>(key.evals.size()) != degree)
        throw Error(ErrorKind::MissingEvaluations, "shift needs full evaluation tuples");
      if (!key.roots.empty()) throw Error(ErrorKind::MissingEvaluations, "shift of an already rooted module");
      ClassTuple evals(key.evals.begin(), key.evals.end() - 1);
      out.add(degree - 1, std::move(evals), {group.iota(key.evals.back())}, cls);
    }
  }
  return out;
}

SModClass forget_evaluations(const SModClass& x) {
  SModClass out;
  for (int degree : x.support())
    for (const auto& [key, cls] : *x.part(degree)) out.add(degree, {}, key.roots, cls);
  return out;
}

SModClass day_convolve(const SModClass& x, const SModClass& y, int max_degree) {
  SModClass out;
  for (int a : x.support()) {
    for (int b : y.support()) {
      if (a + b > max_degree) continue;
      const int n = a + b;
      const std::vector<int> ks{a, b};
      const auto sh = shuffles(ks);
      for (const auto& [kx, cx] : *x.part(a)) {
        for (const auto& [ky, cy] : *y.part(b)) {
          const bool tracked = static_cast<int>(kx.evals.size()) == a && static_cast<int>(ky.evals.size()) == b;
          ClassTuple roots = kx.roots;
          roots.insert(roots.end(), ky.roots.begin(), ky.roots.end());
          const MotivePoly cls = cx * cy;
          if (!tracked) {
            out.add(n, {}, roots, cls * BigInt(sh.size()));
            continue;
          }
          for (const auto& sigma : sh) {
            ClassTuple evals(n);
            for (int p = 0; p < a; ++p) evals[sigma[p] - 1] = kx.evals[p];
            for (int p = 0; p < b; ++p) evals[sigma[a + p] - 1] = ky.evals[p];
            out.add(n, std::move(evals), roots, cls);
          }
        }
      }
    }
  }
  return out;
}

namespace {

struct SlotCandidate {
  const ClassTuple* evals;  // null when forgotten
  const MotivePoly* cls;
};

}  // namespace

SModClass compose(const SModClass& x, const SModClass& w, int max_degree, int min_degree, EngineStats* stats) {
  if (const auto* zero = w.part(0); zero != nullptr && !zero->empty())
    throw Error(ErrorKind::NonEmptyDegreeZero, "composition needs an empty degree-0 part on the right");

  // Slot candidates by (k, root).
  std::map<int, std::map<ClassId, std::vector<SlotCandidate>>> candidates;
  for (int k : w.support()) {
    for (const auto& [key, cls] : *w.part(k)) {
      if (key.roots.size() != 1) throw Error(ErrorKind::MissingEvaluations, "right argument of ∘ must be rooted");
      const bool tracked = static_cast<int>(key.evals.size()) == k;
      candidates[k][key.roots[0]].push_back(SlotCandidate{tracked ? &key.evals : nullptr, &cls});
    }
  }
  std::vector<int> slot_degrees;
  for (const auto& [k, unused] : candidates) slot_degrees.push_back(k);

  std::map<std::vector<int>, std::vector<std::vector<int>>> shuffle_cache;
  auto cached_shuffles = [&](const std::vector<int>& ks) -> const std::vector<std::vector<int>>& {
    auto it = shuffle_cache.find(ks);
    if (it == shuffle_cache.end()) it = shuffle_cache.emplace(ks, shuffles(ks)).first;
    return it->second;
  };

  std::uint64_t checked = 0;
  SModClass out;
  for (int n = std::max(min_degree, 0); n <= max_degree; ++n) {
    for (int m : x.support()) {
      if (m > n || (m == 0) != (n == 0)) continue;
      std::map<GeneratorKey, MotivePoly> sums;
      for (const auto& [xkey, xcls] : *x.part(m)) {
        if (static_cast<int>(xkey.evals.size()) != m)
          throw Error(ErrorKind::MissingEvaluations, "left argument of ∘ needs evaluation tuples");
        std::vector<int> ks(m);
        std::vector<const std::vector<SlotCandidate>*> slot_lists(m);
        std::vector<std::size_t> choice(m);

        // For a fixed block-size vector, run over slot choices and shuffles.
        auto expand = [&]() {
          const auto& sh = cached_shuffles(ks);
          std::fill(choice.begin(), choice.end(), 0);
          while (true) {
            MotivePoly cls = xcls;
            bool tracked = true;
            for (int i = 0; i < m; ++i) {
              const auto& cand = (*slot_lists[i])[choice[i]];
              cls *= *cand.cls;
              tracked = tracked && cand.evals != nullptr;
            }
            std::map<GeneratorKey, std::int64_t> counts;
            for (const auto& sigma : sh) {
              if (auto tau = fixing_permutation(xkey.evals, ks, sigma))
                throw NonFreeActionError("slot permutation " + describe(*tau) + " fixes the index data",
                                         std::move(*tau));
              ++checked;
              GeneratorKey key{{}, xkey.roots};
              if (tracked) {
                key.evals.resize(n);
                int pos = 0;
                for (int i = 0; i < m; ++i) {
                  const auto& evals = *(*slot_lists[i])[choice[i]].evals;
                  for (int j = 0; j < ks[i]; ++j) key.evals[sigma[pos + j] - 1] = evals[j];
                  pos += ks[i];
                }
              }
              ++counts[key];
            }
            for (auto& [key, count] : counts) {
              auto [it, inserted] = sums.try_emplace(key);
              it->second += cls * BigInt(count);
            }
            int pos = m - 1;
            while (pos >= 0 && ++choice[pos] == slot_lists[pos]->size()) choice[pos--] = 0;
            if (pos < 0) break;
          }
        };

        // Block sizes summing to n, each with a candidate matching the root.
        auto split = [&](auto&& self, int i, int remaining) -> void {
          if (i == m) {
            if (remaining == 0) expand();
            return;
          }
          const int left_after = m - i - 1;  // every later slot takes >= 1 label
          for (int k : slot_degrees) {
            if (k > remaining - left_after) break;
            const auto& by_root = candidates[k];
            auto it = by_root.find(xkey.evals[i]);
            if (it == by_root.end()) continue;
            ks[i] = k;
            slot_lists[i] = &it->second;
            self(self, i + 1, remaining - k);
          }
        };
        split(split, 0, n);
      }
      const BigInt orbit = factorial(m);
      for (auto& [key, total] : sums) out.add(n, key.evals, key.roots, divide_exact(total, orbit));
    }
  }
  if (stats) stats->generators_checked += checked;
  return out;
}

SModClass pair_fiber(const SModClass& pairs, const SModClass& z) {
  std::map<ClassTuple, MotivePoly> pair_classes;
  if (const auto* p = pairs.part(2))
    for (const auto& [key, cls] : *p) {
      if (key.evals.size() != 2) throw Error(ErrorKind::MissingEvaluations, "pair module needs evaluations");
      pair_classes[key.evals] += cls;
    }
  SModClass out;
  for (int degree : z.support()) {
    for (const auto& [key, cls] : *z.part(degree)) {
      if (key.roots.size() != 2) throw Error(ErrorKind::MissingEvaluations, "pair fiber needs two roots");
      auto it = pair_classes.find(key.roots);
      if (it != pair_classes.end()) out.add(degree, key.evals, {}, cls * it->second);
    }
  }
  return out;
}

MotivePoly forget_class(const SModClass& x, int n) {
  MotivePoly out;
  if (const auto* p = x.part(n))
    for (const auto& [key, cls] : *p) out += cls;
  return out;
}

}  // namespace covermotive
