#pragma once

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "eulerclass/multigraph.hpp"

namespace eulerclass {

using BigInt = boost::multiprecision::cpp_int;

// Sparse table of coefficients t_ij of x^i y^j. Only nonzero entries are stored.
class TuttePolynomial {
 public:
  using Terms = std::map<std::pair<int, int>, BigInt>;

  static TuttePolynomial one();

  const Terms& terms() const { return terms_; }
  BigInt coefficient(int i, int j) const;
  void add(int i, int j, const BigInt& c);

  TuttePolynomial times_x() const;
  TuttePolynomial times_y() const;
  TuttePolynomial& operator+=(const TuttePolynomial& o);
  friend TuttePolynomial operator+(TuttePolynomial a, const TuttePolynomial& b) { return a += b; }

  // Human-readable, highest x power first: "x^2 + x + y".
  std::string str() const;

  friend bool operator==(const TuttePolynomial&, const TuttePolynomial&) = default;

 private:
  Terms terms_;
};

// Recursion on the smallest present edge: bridge -> x T(G/e), loop -> y T(G-e),
// otherwise T(G-e) + T(G/e); edgeless views give 1. Subresults are memoized
// on the sorted multiset of merged endpoints.
TuttePolynomial tutte_deletion_contraction(const GraphView& view);

// Sum of x^internal y^external over all spanning forests.
TuttePolynomial tutte_activity_expansion(const GraphView& view,
                                         std::size_t cap = kDefaultForestCap);

BigInt evaluate(const TuttePolynomial& p, long x, long y);

}  // namespace eulerclass
