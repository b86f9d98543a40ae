// Budgeted partial combinatory algebra over the K/S basis.
//
// Terms are immutable binary trees over the atoms K and S. Application is
// deterministic normal-order (leftmost-outermost) reduction, cut off by a
// step budget so that "defined" is decidable per run. Equality of results
// is syntactic equality of normal forms; this is sound but incomplete for
// extensional equality, which is all the realizability layer needs.

#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace epswb::pca {

class Term {
 public:
  static Term k();
  static Term s();
  static Term app(const Term& fun, const Term& arg);

  bool is_k() const;
  bool is_s() const;
  bool is_app() const;

  // Valid only when is_app().
  Term fun() const;
  Term arg() const;

  // Number of application nodes; the "size" used by canonical term order.
  int app_count() const;

  // Total order: app_count first, then K < S < application, then
  // lexicographic on subterms. All canonical enumerations use it.
  static int compare(const Term& a, const Term& b);

  friend bool operator==(const Term& a, const Term& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermLess {
  bool operator()(const Term& a, const Term& b) const {
    return Term::compare(a, b) < 0;
  }
};

struct Budget {
  long max_steps;

  explicit Budget(long steps) : max_steps(steps) {
    if (steps < 1) throw std::invalid_argument("budget must allow >= 1 step");
  }
};

// Default used everywhere a budget is not given explicitly.
Budget default_budget();

class EvalOutcome {
 public:
  static EvalOutcome normal_form(Term t);
  static EvalOutcome budget_exceeded();

  // True when reduction reached a normal form within budget.
  bool defined() const { return term_.has_value(); }
  const Term& term() const;

 private:
  EvalOutcome() = default;
  std::optional<Term> term_;
};

// Normal-order reduction to full normal form (head redexes first, then
// arguments left to right), stopping after b.max_steps contractions.
EvalOutcome reduce(const Term& t, Budget b);

// Kleene application surrogate: reduce(fies arg, b).
EvalOutcome apply(const Term& f, const Term& a, Budget b);

bool is_normal_form(const Term& t);

// Derived combinator library. Every term is closed over K and S and
// satisfies the usual law under reduce:
//   identity x          => x
//   pairing a b f       => f a b     (so fst (pairing a b) => a, etc.)
//   proj_fst (pairing a b) => a
//   proj_snd (pairing a b) => b
//   composition g f x   => g (f x)
//   constant t a        => t
//   successor n         => numeral(k+1) behaviour when n decodes to k
Term identity();
Term pairing();
Term proj_fst();
Term proj_snd();
Term composition();
Term constant(const Term& result);
Term numeral(int k);
Term successor();

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what), position(pos) {}
};

// Textual syntax: atoms `K`, `S`, juxtaposition (left associative) and
// parentheses, e.g. `(S K K)`. print_term and parse_term round-trip.
Term parse_term(std::string_view text);
std::string print_term(const Term& t);

}  // namespace epswb::pca
