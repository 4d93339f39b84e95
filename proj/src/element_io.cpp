#include "daff/element_io.hpp"

#include <cctype>
#include <charconv>

#include "daff/error.hpp"

namespace daff {

namespace {

class Parser {
 public:
  Parser(std::string_view text) {
    for (std::size_t k = 0; k < text.size(); ++k)
      if (!std::isspace(static_cast<unsigned char>(text[k]))) {
        chars_.push_back(text[k]);
        positions_.push_back(k);
      }
    end_position_ = text.size();
  }

  bool done() const { return at_ >= chars_.size(); }
  std::size_t position() const { return at_ < positions_.size() ? positions_[at_] : end_position_; }
  char peek() const { return done() ? '\0' : chars_[at_]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, position()); }

  bool accept(std::string_view token) {
    if (chars_.compare(at_, token.size(), token) != 0) return false;
    at_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  Int integer() {
    std::size_t start = at_;
    if (peek() == '-' || peek() == '+') ++at_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++at_;
    std::string digits = chars_.substr(start, at_ - start);
    if (digits.empty() || digits == "-" || digits == "+") {
      at_ = start;
      fail("expected an integer");
    }
    if (digits[0] == '+') digits.erase(0, 1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      at_ = start;
      fail("integer out of range");
    }
    return value;
  }

  IntVec intvec(int rank) {
    std::size_t start = position();
    IntVec v{integer()};
    while (accept(",")) v.push_back(integer());
    if (v.size() == 1 && v[0] == 0 && rank != 1) return IntVec(rank, 0);
    if (static_cast<int>(v.size()) != rank)
      throw ParseError("expected " + std::to_string(rank) + " coordinates, got " +
                           std::to_string(v.size()),
                       start);
    return v;
  }

 private:
  std::string chars_;
  std::vector<std::size_t> positions_;
  std::size_t end_position_ = 0;
  std::size_t at_ = 0;
};

std::string join(const IntVec& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v[k]);
  }
  return out;
}

bool all_zero(const IntVec& v) {
  for (Int c : v)
    if (c != 0) return false;
  return true;
}

}  // namespace

SemigroupElement parse_element(const RootSystem& system, std::string_view text) {
  Parser p(text);
  const int n = system.rank();
  p.expect("X[");
  bool weight_coords = p.accept("w:");
  IntVec mu = p.intvec(n);
  p.expect(";");
  Int m = p.integer();
  p.expect(";");
  Int l = p.integer();
  p.expect("]");
  IntVec lambda(n, 0);
  if (p.accept("Y[")) {
    lambda = p.intvec(n);
    p.expect("]");
  }
  std::vector<int> word;
  while (p.accept("s")) {
    char c = p.peek();
    if (!std::isdigit(static_cast<unsigned char>(c))) p.fail("expected a reflection index");
    int i = c - '0';
    if (i < 1 || i > n) p.fail("finite reflection index out of range");
    p.expect(std::string(1, c));
    word.push_back(i);
  }
  if (!p.done()) p.fail("unexpected trailing input");
  FiniteWeight weight = weight_coords ? FiniteWeight(&system, mu)
                                      : FiniteWeight::from_root_vector(system, mu);
  return SemigroupElement(AffineWeight{weight, m, l},
                          AffineWeylElement(lambda, FiniteWeylElement::from_word(system, word)));
}

DoubleAffineRoot parse_root(const RootSystem& system, std::string_view text) {
  Parser p(text);
  IntVec nu = p.intvec(system.rank());
  p.expect(";");
  Int r = p.integer();
  p.expect(";");
  Int j = p.integer();
  if (!p.done()) p.fail("unexpected trailing input");
  return {FiniteRoot::from_coords(system, nu), r, j};
}

IntVec parse_intvec(const RootSystem& system, std::string_view text) {
  Parser p(text);
  IntVec v = p.intvec(system.rank());
  if (!p.done()) p.fail("unexpected trailing input");
  return v;
}

std::string format_weight(const AffineWeight& zeta) {
  const RootSystem& sys = zeta.system();
  std::string mu;
  if (auto root = sys.weight_to_root_vector(zeta.mu.coords()))
    mu = join(*root);
  else
    mu = "w:" + join(zeta.mu.coords());
  return mu + ";" + std::to_string(zeta.m) + ";" + std::to_string(zeta.l);
}

std::string format_element(const SemigroupElement& x) {
  std::string out = "X[" + format_weight(x.zeta()) + "]";
  if (!all_zero(x.wtilde().lambda())) out += " Y[" + join(x.wtilde().lambda()) + "]";
  std::vector<int> word = x.wtilde().finite_part().reduced_word();
  if (!word.empty()) {
    out += ' ';
    for (int i : word) out += "s" + std::to_string(i);
  }
  return out;
}

std::string format_root(const DoubleAffineRoot& root) {
  return join(root.nu.coords()) + ";" + std::to_string(root.r) + ";" + std::to_string(root.j);
}

std::string format_affine_root(const AffineRoot& root) {
  return join(root.nu.coords()) + ";" + std::to_string(root.r);
}

std::string format_affine_element(const AffineWeylElement& w) {
  std::vector<int> word = w.reduced_word();
  if (word.empty()) return "id";
  std::string out;
  for (int i : word) out += "s" + std::to_string(i);
  return out;
}

}  // namespace daff
