#include "dcreg/core/poly_io.hpp"

#include <cctype>
#include <stdexcept>

namespace dcreg {

namespace {

template <class K>
class Parser {
 public:
  Parser(const RingPtr<K>& ring, std::string_view s) : ring_(ring), s_(s) {}

  SparsePoly<K> run() {
    std::vector<typename SparsePoly<K>::Term> terms;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      bool neg = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        neg = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto t = term();
      if (neg) t.coef = -t.coef;
      terms.push_back(std::move(t));
    }
    return SparsePoly<K>::from_terms(ring_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string digits() {
    skip();
    size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected digits");
    return std::string(s_.substr(b, pos_ - b));
  }

  typename SparsePoly<K>::Term term() {
    const auto& F = ring_->field();
    K coef = F.one();
    Monomial mono;
    bool any = false;
    while (true) {
      skip();
      if (pos_ == s_.size()) fail("dangling operator");
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = digits();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '/') {
          ++pos_;
          num += "/" + digits();
        }
        coef = coef * convert(parse_rational(num), F);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t b = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string name(s_.substr(b, pos_ - b));
        int idx = ring_->index_of(name);
        if (idx < 0) fail("unknown variable '" + name + "'");
        int e = 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          e = std::stoi(digits());
        }
        mono.set(idx, mono[idx] + e);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return {mono, coef};
  }

  const RingPtr<K>& ring_;
  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

template <class K>
SparsePoly<K> parse_poly(const RingPtr<K>& ring, std::string_view text) {
  return Parser<K>(ring, text).run();
}

template <class K>
std::string to_string(const SparsePoly<K>& P) {
  if (P.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : P.terms()) {
    bool neg = scalar_traits<K>::is_negative(t.coef);
    K mag = neg ? K(-t.coef) : t.coef;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    bool unit = scalar_traits<K>::is_one(mag);
    bool constant = t.mono.degree() == 0;
    if (!unit || constant) {
      out += scalar_traits<K>::to_string(mag);
      if (!constant) out += "*";
    }
    bool firstvar = true;
    for (int i = 0; i < P.nvars(); ++i) {
      int e = t.mono[i];
      if (!e) continue;
      if (!firstvar) out += "*";
      firstvar = false;
      out += P.ring()->name(i);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

template SparsePoly<Fp> parse_poly(const RingPtr<Fp>&, std::string_view);
template SparsePoly<Rational> parse_poly(const RingPtr<Rational>&, std::string_view);
template std::string to_string(const SparsePoly<Fp>&);
template std::string to_string(const SparsePoly<Rational>&);

}  // namespace dcreg
