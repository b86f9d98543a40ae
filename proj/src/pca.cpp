#include "epswb/pca.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace epswb::pca {

struct Term::Node {
  enum class Tag : unsigned char { K, S, App };
  Tag tag;
  int apps;
  std::shared_ptr<const Node> fun;
  std::shared_ptr<const Node> arg;
};

namespace {

using NodePtr = std::shared_ptr<const Term::Node>;

const NodePtr& k_node() {
  static const NodePtr n = std::make_shared<Term::Node>(
      Term::Node{Term::Node::Tag::K, 0, nullptr, nullptr});
  return n;
}

const NodePtr& s_node() {
  static const NodePtr n = std::make_shared<Term::Node>(
      Term::Node{Term::Node::Tag::S, 0, nullptr, nullptr});
  return n;
}

}  // namespace

Term Term::k() { return Term(k_node()); }
Term Term::s() { return Term(s_node()); }

Term Term::app(const Term& fun, const Term& arg) {
  auto node = std::make_shared<Node>(
      Node{Node::Tag::App, fun.app_count() + arg.app_count() + 1, fun.node_,
           arg.node_});
  return Term(std::move(node));
}

bool Term::is_k() const { return node_->tag == Node::Tag::K; }
bool Term::is_s() const { return node_->tag == Node::Tag::S; }
bool Term::is_app() const { return node_->tag == Node::Tag::App; }

Term Term::fun() const { return Term(node_->fun); }

Term Term::arg() const { return Term(node_->arg); }

int Term::app_count() const { return node_->apps; }

int Term::compare(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return 0;
  if (a.app_count() != b.app_count())
    return a.app_count() < b.app_count() ? -1 : 1;
  auto rank = [](const Term& t) { return t.is_k() ? 0 : (t.is_s() ? 1 : 2); };
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
  if (!a.is_app()) return 0;
  int c = compare(a.fun(), b.fun());
  if (c != 0) return c;
  return compare(a.arg(), b.arg());
}

EvalOutcome EvalOutcome::normal_form(Term t) {
  EvalOutcome out;
  out.term_ = std::move(t);
  return out;
}

EvalOutcome EvalOutcome::budget_exceeded() { return EvalOutcome(); }

const Term& EvalOutcome::term() const {
  if (!term_.has_value())
    throw std::logic_error("EvalOutcome: no normal form (budget exceeded)");
  return *term_;
}

Budget default_budget() { return Budget(10'000); }

namespace {

Term respine(const Term& head, const std::vector<Term>& args, size_t from) {
  Term t = head;
  for (size_t i = from; i < args.size(); ++i) t = Term::app(t, args[i]);
  return t;
}

// Normal-order normalization. Contracts the head redex while one exists,
// then recurses into the arguments left to right; every contraction costs
// one step from *steps_left. Returns nullopt once the budget is spent.
std::optional<Term> normalize(Term t, long* steps_left) {
  for (;;) {
    std::vector<Term> args;
    Term head = t;
    while (head.is_app()) {
      args.push_back(head.arg());
      head = head.fun();
    }
    std::reverse(args.begin(), args.end());

    if (head.is_k() && args.size() >= 2) {
      if (--*steps_left < 0) return std::nullopt;
      t = respine(args[0], args, 2);
      continue;
    }
    if (head.is_s() && args.size() >= 3) {
      if (--*steps_left < 0) return std::nullopt;
      Term contracted =
          Term::app(Term::app(args[0], args[2]), Term::app(args[1], args[2]));
      t = respine(contracted, args, 3);
      continue;
    }

    // Head normal; normalize the remaining arguments.
    Term result = head;
    for (const Term& a : args) {
      auto na = normalize(a, steps_left);
      if (!na) return std::nullopt;
      result = Term::app(result, *na);
    }
    return result;
  }
}

}  // namespace

EvalOutcome reduce(const Term& t, Budget b) {
  long steps = b.max_steps;
  auto nf = normalize(t, &steps);
  if (!nf) return EvalOutcome::budget_exceeded();
  return EvalOutcome::normal_form(*nf);
}

EvalOutcome apply(const Term& f, const Term& a, Budget b) {
  return reduce(Term::app(f, a), b);
}

bool is_normal_form(const Term& t) {
  std::vector<Term> args;
  Term head = t;
  while (head.is_app()) {
    args.push_back(head.arg());
    head = head.fun();
  }
  if (head.is_k() && args.size() >= 2) return false;
  if (head.is_s() && args.size() >= 3) return false;
  for (const Term& a : args)
    if (!is_normal_form(a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Combinator library, derived once via bracket abstraction over a private
// lambda AST. Only closed K/S terms ever leave this file.

namespace {

struct LTerm {
  enum class Tag { Var, K, S, App };
  Tag tag = Tag::K;
  std::string var;
  std::shared_ptr<const LTerm> fun, arg;
};

using LPtr = std::shared_ptr<const LTerm>;

LPtr lvar(std::string name) {
  auto t = std::make_shared<LTerm>();
  t->tag = LTerm::Tag::Var;
  t->var = std::move(name);
  return t;
}

LPtr lk() {
  auto t = std::make_shared<LTerm>();
  t->tag = LTerm::Tag::K;
  return t;
}

LPtr ls() {
  auto t = std::make_shared<LTerm>();
  t->tag = LTerm::Tag::S;
  return t;
}

LPtr lapp(LPtr f, LPtr a) {
  auto t = std::make_shared<LTerm>();
  t->tag = LTerm::Tag::App;
  t->fun = std::move(f);
  t->arg = std::move(a);
  return t;
}

bool occurs(const std::string& name, const LPtr& t) {
  switch (t->tag) {
    case LTerm::Tag::Var:
      return t->var == name;
    case LTerm::Tag::App:
      return occurs(name, t->fun) || occurs(name, t->arg);
    default:
      return false;
  }
}

// T-rule abstraction with the eta shortcut [x](t x) = t.
LPtr abstract_var(const std::string& name, const LPtr& body) {
  if (!occurs(name, body)) return lapp(lk(), body);
  if (body->tag == LTerm::Tag::Var) return lapp(lapp(ls(), lk()), lk());  // I
  // body is an application containing the variable
  if (body->arg->tag == LTerm::Tag::Var && body->arg->var == name &&
      !occurs(name, body->fun))
    return body->fun;
  return lapp(lapp(ls(), abstract_var(name, body->fun)),
              abstract_var(name, body->arg));
}

Term to_term(const LPtr& t) {
  switch (t->tag) {
    case LTerm::Tag::K:
      return Term::k();
    case LTerm::Tag::S:
      return Term::s();
    case LTerm::Tag::App:
      return Term::app(to_term(t->fun), to_term(t->arg));
    default:
      throw std::logic_error("open lambda term escaped abstraction");
  }
}

Term close1(const std::string& x, const LPtr& body) {
  return to_term(abstract_var(x, body));
}

}  // namespace

Term identity() {
  // S K K
  static const Term t = Term::app(Term::app(Term::s(), Term::k()), Term::k());
  return t;
}

Term pairing() {
  // \a.\b.\f. f a b
  static const Term t = [] {
    LPtr body = lapp(lapp(lvar("f"), lvar("a")), lvar("b"));
    return to_term(abstract_var(
        "a", abstract_var("b", abstract_var("f", body))));
  }();
  return t;
}

Term proj_fst() {
  // \p. p K
  static const Term t = close1("p", lapp(lvar("p"), lk()));
  return t;
}

Term proj_snd() {
  // \p. p (K I)
  static const Term t =
      close1("p", lapp(lvar("p"), lapp(lk(), lapp(lapp(ls(), lk()), lk()))));
  return t;
}

Term composition() {
  // \g.\f.\x. g (f x)
  static const Term t = [] {
    LPtr body = lapp(lvar("g"), lapp(lvar("f"), lvar("x")));
    return to_term(abstract_var(
        "g", abstract_var("f", abstract_var("x", body))));
  }();
  return t;
}

Term constant(const Term& result) { return Term::app(Term::k(), result); }

Term numeral(int k) {
  if (k < 0) throw std::invalid_argument("numeral index must be >= 0");
  LPtr body = lvar("x");
  for (int i = 0; i < k; ++i) body = lapp(lvar("f"), body);
  return to_term(abstract_var("f", abstract_var("x", body)));
}

Term successor() {
  // \n.\f.\x. f (n f x)
  static const Term t = [] {
    LPtr body = lapp(lvar("f"), lapp(lapp(lvar("n"), lvar("f")), lvar("x")));
    return to_term(abstract_var(
        "n", abstract_var("f", abstract_var("x", body))));
  }();
  return t;
}

// ---------------------------------------------------------------------------
// Concrete syntax

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  std::optional<Term> atom() {
    skip_ws();
    if (pos >= text.size()) return std::nullopt;
    char c = text[pos];
    if (c == 'K') {
      ++pos;
      return Term::k();
    }
    if (c == 'S') {
      ++pos;
      return Term::s();
    }
    if (c == '(') {
      ++pos;
      Term inner = sequence();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')')
        throw ParseError("expected ')'", pos);
      ++pos;
      return inner;
    }
    return std::nullopt;
  }

  Term sequence() {
    auto first = atom();
    if (!first) throw ParseError("expected term", pos);
    Term acc = *first;
    for (;;) {
      auto next = atom();
      if (!next) break;
      acc = Term::app(acc, *next);
    }
    return acc;
  }
};

void print_into(const Term& t, std::string& out, bool parenthesize) {
  if (t.is_k()) {
    out += 'K';
    return;
  }
  if (t.is_s()) {
    out += 'S';
    return;
  }
  if (parenthesize) out += '(';
  print_into(t.fun(), out, false);
  out += ' ';
  print_into(t.arg(), out, true);
  if (parenthesize) out += ')';
}

}  // namespace

Term parse_term(std::string_view text) {
  Parser p{text};
  Term t = p.sequence();
  if (!p.at_end()) throw ParseError("trailing input after term", p.pos);
  return t;
}

std::string print_term(const Term& t) {
  std::string out;
  if (t.is_app()) {
    out += '(';
    print_into(t, out, false);
    out += ')';
  } else {
    print_into(t, out, false);
  }
  return out;
}

}  // namespace epswb::pca
