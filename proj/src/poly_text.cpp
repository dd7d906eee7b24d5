#include <cctype>
#include <sstream>

#include "frobdepth/ring.hpp"

namespace frobdepth {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingCtx& ctx) : text_(text), ctx_(ctx) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    while (true) {
      Term t = term();
      if (negative) t.coef = ctx_.neg(t.coef);
      terms.push_back(t);
      skip_ws();
      if (at_end()) break;
      char c = get();
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      negative = c == '-';
    }
    return Polynomial::from_terms(std::move(terms), ctx_);
  }

 private:
  Term term() {
    Coeff coef = 1;
    std::vector<int> exps(ctx_.n(), 0);
    while (true) {
      skip_ws();
      if (at_end()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = ctx_.mul(coef, ctx_.from_int(number()));
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        std::string name = identifier();
        int idx = ctx_.var_index(name);
        if (idx < 0) fail("unknown variable '" + name + "'");
        long long k = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          get();
          skip_ws();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("exponent expected after '^'");
          k = number();
        }
        long long total = exps[idx] + k;
        if (total > 0xFFFF) fail("exponent too large");
        exps[idx] = static_cast<int>(total);
      } else {
        fail(std::string("unexpected '") + peek() + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        continue;
      }
      break;
    }
    return Term{coef, ctx_.monomial(exps)};
  }

  long long number() {
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > (1LL << 40)) fail("integer literal too large");
    }
    return v;
  }

  std::string identifier() {
    std::string s;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      s.push_back(get());
    return s;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError,
                msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  const RingCtx& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingCtx& ctx) {
  return PolyParser(text, ctx).parse();
}

std::string to_string(const Monomial& m, const RingCtx& ctx) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < ctx.n(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    os << ctx.var_names()[i];
    if (m[i] > 1) os << '^' << m[i];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

std::string to_string(const Polynomial& f, const RingCtx& ctx) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = t.coef > ctx.p() / 2;
    Coeff mag = negative ? ctx.p() - t.coef : t.coef;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    if (t.mono.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << to_string(t.mono, ctx);
    }
    first = false;
  }
  return os.str();
}

}  // namespace frobdepth
