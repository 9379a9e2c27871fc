// Depth-first search over finite domains with constraints checked as soon as
// their last variable is assigned. Solutions come out in lexicographic order
// (variable 0 most significant, each domain in the order given).
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "seccoh/finite_group.hpp"

namespace seccoh::detail {

class FiniteCsp {
 public:
  using Assignment = std::vector<Elem>;
  using Predicate = std::function<bool(const Assignment&)>;
  enum class Outcome { complete, stopped, budget };

  explicit FiniteCsp(std::vector<std::vector<Elem>> domains)
      : domains_(std::move(domains)), checks_(domains_.size()) {}

  std::size_t variables() const { return domains_.size(); }

  void add_constraint(const std::vector<std::size_t>& vars, Predicate pred) {
    std::size_t last = 0;
    for (std::size_t v : vars) last = std::max(last, v);
    checks_[last].push_back(preds_.size());
    preds_.push_back(std::move(pred));
  }

  /// Calls visit on every solution until it returns false. Each tentative
  /// value assignment counts as one node against the budget.
  Outcome solve(std::uint64_t budget, const std::function<bool(const Assignment&)>& visit,
                std::uint64_t* nodes_out = nullptr) const {
    const std::size_t n = domains_.size();
    Assignment assign(n, 0);
    std::vector<std::size_t> choice(n, 0);
    std::uint64_t nodes = 0;
    auto done = [&](Outcome o) {
      if (nodes_out) *nodes_out = nodes;
      return o;
    };
    if (n == 0) return done(visit(assign) ? Outcome::complete : Outcome::stopped);
    for (const auto& d : domains_)
      if (d.empty()) return done(Outcome::complete);
    std::size_t depth = 0;
    choice[0] = 0;
    for (;;) {
      if (choice[depth] == domains_[depth].size()) {
        if (depth == 0) return done(Outcome::complete);
        --depth;
        ++choice[depth];
        continue;
      }
      if (++nodes > budget) return done(Outcome::budget);
      assign[depth] = domains_[depth][choice[depth]];
      bool ok = true;
      for (std::size_t c : checks_[depth])
        if (!preds_[c](assign)) {
          ok = false;
          break;
        }
      if (!ok) {
        ++choice[depth];
        continue;
      }
      if (depth + 1 == n) {
        if (!visit(assign)) return done(Outcome::stopped);
        ++choice[depth];
        continue;
      }
      ++depth;
      choice[depth] = 0;
    }
  }

 private:
  std::vector<std::vector<Elem>> domains_;
  std::vector<std::vector<std::size_t>> checks_;
  std::vector<Predicate> preds_;
};

}  // namespace seccoh::detail
