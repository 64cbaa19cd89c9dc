#include "eulerclass/tutte.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "eulerclass/kernels.hpp"

namespace eulerclass {

TuttePolynomial TuttePolynomial::one() {
  TuttePolynomial p;
  p.add(0, 0, 1);
  return p;
}

BigInt TuttePolynomial::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TuttePolynomial::add(int i, int j, const BigInt& c) {
  if (c == 0) return;
  BigInt& slot = terms_[{i, j}];
  slot += c;
  if (slot == 0) terms_.erase({i, j});
}

TuttePolynomial TuttePolynomial::times_x() const {
  TuttePolynomial out;
  for (const auto& [ij, c] : terms_) out.terms_.emplace(std::pair{ij.first + 1, ij.second}, c);
  return out;
}

TuttePolynomial TuttePolynomial::times_y() const {
  TuttePolynomial out;
  for (const auto& [ij, c] : terms_) out.terms_.emplace(std::pair{ij.first, ij.second + 1}, c);
  return out;
}

TuttePolynomial& TuttePolynomial::operator+=(const TuttePolynomial& o) {
  for (const auto& [ij, c] : o.terms_) add(ij.first, ij.second, c);
  return *this;
}

namespace {

std::string monomial(const char* var, int power) {
  if (power == 0) return "";
  if (power == 1) return var;
  return std::string(var) + "^" + std::to_string(power);
}

}  // namespace

std::string TuttePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::pair<int, int>, BigInt>> order(terms_.begin(), terms_.end());
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, c] : order) {
    if (!first) os << " + ";
    first = false;
    std::string mono = monomial("x", ij.first) + monomial("y", ij.second);
    if (mono.empty())
      os << c;
    else if (c == 1)
      os << mono;
    else
      os << c << mono;
  }
  return os.str();
}

namespace {

class DeletionContraction {
 public:
  TuttePolynomial run(const GraphView& view) {
    std::vector<EdgeId> by_rank = view.present_by_rank();
    if (by_rank.empty()) return TuttePolynomial::one();
    std::string key = signature(view);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    EdgeId e = by_rank.front();
    TuttePolynomial result;
    if (is_loop(view, e))
      result = run(delete_edge(view, e)).times_y();
    else if (is_bridge(view, e))
      result = run(contract(view, e)).times_x();
    else
      result = run(delete_edge(view, e)) + run(contract(view, e));
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  // Sorted multiset of merged endpoints. Two views with the same signature are
  // the same graph up to isolated vertices, which leave T unchanged.
  static std::string signature(const GraphView& view) {
    std::vector<std::pair<int, int>> ends;
    view.present_edges().for_each([&](EdgeId e) {
      auto [u, v] = view.ends(e);
      ends.emplace_back(std::min(u, v), std::max(u, v));
    });
    std::sort(ends.begin(), ends.end());
    std::string key;
    for (auto [u, v] : ends) key += std::to_string(u) + ":" + std::to_string(v) + ";";
    return key;
  }

  std::unordered_map<std::string, TuttePolynomial> memo_;
};

}  // namespace

TuttePolynomial tutte_deletion_contraction(const GraphView& view) {
  return DeletionContraction{}.run(view);
}

TuttePolynomial tutte_activity_expansion(const GraphView& view, std::size_t cap) {
  std::vector<SpanningForest> forests = spanning_forests(view, cap);
  TuttePolynomial p;
  for (const auto& [ij, count] : activity_tally(view, forests, Exec::kParallel))
    p.add(ij.first, ij.second, count);
  return p;
}

BigInt evaluate(const TuttePolynomial& p, long x, long y) {
  BigInt total = 0;
  for (const auto& [ij, c] : p.terms()) total += c * pow(BigInt(x), ij.first) * pow(BigInt(y), ij.second);
  return total;
}

}  // namespace eulerclass
