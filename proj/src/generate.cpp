#include "rclos/generate.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "rclos/errors.hpp"

namespace rclos {

std::optional<std::size_t> GenSemigroup::find(const RTriple& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

void GenSemigroup::append(GenElement element) {
  index_.emplace(element.triple, elements_.size());
  elements_.push_back(std::move(element));
}

namespace {

// One product or omega-power to evaluate: y == kOmega means bracket omega
// of element x, otherwise the product of elements x and y.
struct Task {
  std::size_t x;
  std::size_t y;
};
constexpr std::size_t kOmega = static_cast<std::size_t>(-1);

struct Candidate {
  RTriple value;
  OmegaTerm witness;
};

Candidate run_task(const GenSemigroup& sg, const Task& task) {
  const auto& x = sg.elements()[task.x];
  if (task.y == kOmega) {
    return {bracket_omega(x.triple, sg.graph()),
            OmegaTerm::omega(x.witness)};
  }
  const auto& y = sg.elements()[task.y];
  return {mul(x.triple, y.triple), OmegaTerm::concat(x.witness, y.witness)};
}

// Candidates of one layer, deduplicated by triple; keeps the witness with
// the smallest rendering.  Keyed by the triple serialization so that the
// layer can be flushed in canonical order.
class Layer {
 public:
  explicit Layer(const GenSemigroup& sg) : sg_(sg) {}

  void offer(Candidate candidate) {
    if (sg_.find(candidate.value)) {
      return;
    }
    std::string render = candidate.witness.render();
    auto [it, fresh] = fresh_.try_emplace(candidate.value.key(),
                                          std::move(candidate), render);
    if (!fresh && render < it->second.render) {
      it->second = Entry{std::move(candidate), std::move(render)};
    }
  }

  // Moves the layer's new elements out, in canonical order.
  std::vector<Candidate> drain() {
    std::vector<Candidate> out;
    out.reserve(fresh_.size());
    for (auto& [key, entry] : fresh_) {
      out.push_back(std::move(entry.candidate));
    }
    fresh_.clear();
    return out;
  }

 private:
  struct Entry {
    Candidate candidate;
    std::string render;

    Entry(Candidate c, std::string r)
        : candidate(std::move(c)), render(std::move(r)) {}
  };

  const GenSemigroup& sg_;
  std::map<std::string, Entry> fresh_;
};

constexpr std::size_t kChunk = 1 << 14;

}  // namespace

GenRun generate_search(const Digraph& g, const StopPredicate& stop,
                       const GenOptions& options) {
  GenRun run{GenSemigroup(g), std::nullopt, false};
  GenSemigroup& sg = run.semigroup;

  // buckets[s] = elements whose witness has s AST nodes.
  std::vector<std::vector<std::size_t>> buckets(2);
  std::size_t max_size = 1;

  auto insert_layer = [&](std::vector<Candidate> fresh,
                          std::size_t layer) -> bool {
    if (fresh.empty()) {
      return false;
    }
    if (buckets.size() <= layer) {
      buckets.resize(layer + 1);
    }
    for (auto& candidate : fresh) {
      if (sg.size() >= options.cap) {
        throw CapacityExceeded("generated set exceeds cap of " +
                               std::to_string(options.cap) + " elements");
      }
      std::size_t id = sg.size();
      sg.append({std::move(candidate.value), std::move(candidate.witness)});
      buckets[layer].push_back(id);
      max_size = std::max(max_size, layer);
      if (stop && stop(sg.elements()[id])) {
        run.hit = id;
        return true;
      }
    }
    return false;
  };

  {
    Layer layer(sg);
    for (char a : g.alphabet()) {
      layer.offer({generator(a, g), OmegaTerm::letter(a)});
    }
    if (insert_layer(layer.drain(), 1)) {
      return run;
    }
  }

  for (std::size_t s = 2; s <= 2 * max_size + 1; ++s) {
    std::vector<Task> tasks;
    for (std::size_t k = 1; k + 1 < s && k < buckets.size(); ++k) {
      std::size_t other = s - 1 - k;
      if (other >= buckets.size()) {
        continue;
      }
      for (std::size_t x : buckets[k]) {
        for (std::size_t y : buckets[other]) {
          tasks.push_back({x, y});
        }
      }
    }
    if (s - 1 < buckets.size()) {
      for (std::size_t x : buckets[s - 1]) {
        tasks.push_back({x, kOmega});
      }
    }

    Layer layer(sg);
    std::vector<std::optional<Candidate>> results(
        std::min(tasks.size(), kChunk));
    for (std::size_t base = 0; base < tasks.size(); base += kChunk) {
      const long chunk =
          static_cast<long>(std::min(kChunk, tasks.size() - base));
      if (options.parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long i = 0; i < chunk; ++i) {
          results[i] = run_task(sg, tasks[base + i]);
        }
      } else {
        for (long i = 0; i < chunk; ++i) {
          results[i] = run_task(sg, tasks[base + i]);
        }
      }
      for (long i = 0; i < chunk; ++i) {
        layer.offer(std::move(*results[i]));
        results[i].reset();
      }
    }
    if (insert_layer(layer.drain(), s)) {
      return run;
    }
  }
  run.completed = true;
  return run;
}

GenSemigroup generate(const Digraph& g, const GenOptions& options) {
  return generate_search(g, StopPredicate{}, options).semigroup;
}

// Reference implementation: same canonical order, written as plain nested
// loops over one layer at a time.  Kept independent of the task/chunk
// machinery above so the two can be checked against each other.
GenSemigroup generate_serial(const Digraph& g, std::size_t cap) {
  GenSemigroup sg(g);
  std::vector<std::vector<std::size_t>> buckets(2);
  std::size_t max_size = 1;

  // key -> (candidate, rendered witness) for the layer being built
  using Pending = std::map<std::string, std::pair<Candidate, std::string>>;
  auto offer = [&](Pending& pending, Candidate c) {
    if (sg.find(c.value)) {
      return;
    }
    std::string key = c.value.key();
    std::string render = c.witness.render();
    auto it = pending.find(key);
    if (it == pending.end()) {
      pending.emplace(std::move(key), std::make_pair(std::move(c), render));
    } else if (render < it->second.second) {
      it->second = std::make_pair(std::move(c), std::move(render));
    }
  };
  auto flush = [&](Pending& pending, std::size_t layer) {
    if (pending.empty()) {
      return;
    }
    if (buckets.size() <= layer) {
      buckets.resize(layer + 1);
    }
    for (auto& [key, entry] : pending) {
      if (sg.size() >= cap) {
        throw CapacityExceeded("generated set exceeds cap of " +
                               std::to_string(cap) + " elements");
      }
      buckets[layer].push_back(sg.size());
      sg.append({std::move(entry.first.value), std::move(entry.first.witness)});
      max_size = std::max(max_size, layer);
    }
    pending.clear();
  };

  Pending pending;
  for (char a : g.alphabet()) {
    offer(pending, {generator(a, g), OmegaTerm::letter(a)});
  }
  flush(pending, 1);

  for (std::size_t s = 2; s <= 2 * max_size + 1; ++s) {
    for (std::size_t k = 1; k + 1 < s && k < buckets.size(); ++k) {
      std::size_t other = s - 1 - k;
      if (other >= buckets.size()) {
        continue;
      }
      for (std::size_t xi : buckets[k]) {
        for (std::size_t yi : buckets[other]) {
          const auto& x = sg.elements()[xi];
          const auto& y = sg.elements()[yi];
          offer(pending, {mul(x.triple, y.triple),
                          OmegaTerm::concat(x.witness, y.witness)});
        }
      }
    }
    if (s - 1 < buckets.size()) {
      for (std::size_t xi : buckets[s - 1]) {
        const auto& x = sg.elements()[xi];
        offer(pending,
              {bracket_omega(x.triple, g), OmegaTerm::omega(x.witness)});
      }
    }
    flush(pending, s);
  }
  return sg;
}

double element_count_bound(int states, int alphabet_size) {
  double m = states;
  double n = alphabet_size;
  return std::pow(2.0, (m * m + 1.0) * n) * 3.0 * std::tgamma(n + 1.0);
}

}  // namespace rclos
