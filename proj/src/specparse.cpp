#include "mga/specparse.hpp"

#include <cctype>
#include <sstream>

namespace mga {

namespace {

class Cursor {
 public:
  Cursor(const std::string& s, std::size_t base = 0) : s_(s), base_(base) {}

  bool done() const { return i_ >= s_.size(); }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  char take() { return s_[i_++]; }
  std::size_t pos() const { return base_ + i_; }

  bool eat(char c) {
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) throw ParseError(pos(), std::string("expected '") + c + "'");
  }

  bool eatWord(const std::string& w) {
    if (s_.compare(i_, w.size(), w) == 0) {
      i_ += w.size();
      return true;
    }
    return false;
  }

  long long integer() {
    bool neg = eat('-');
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(pos(), "expected an integer");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (take() - '0');
    return neg ? -v : v;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
  std::size_t base_;
};

// sum of terms: [sign] [coeff] ['t' ['^' exp]]
Poly parsePoly(Cursor& c, char stopA, char stopB) {
  Poly p;
  auto addTerm = [&](long long coeff, std::size_t deg) {
    if (p.size() <= deg) p.resize(deg + 1, 0);
    p[deg] += coeff;
  };
  bool first = true;
  while (true) {
    long long sign = 1;
    if (c.eat('+')) {
      sign = 1;
    } else if (c.eat('-')) {
      sign = -1;
    } else if (!first) {
      break;
    }
    first = false;
    long long coeff = 1;
    bool sawCoeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = c.integer();
      sawCoeff = true;
    }
    std::size_t deg = 0;
    if (c.eat('t')) {
      deg = 1;
      if (c.eat('^')) {
        const long long e = c.integer();
        if (e < 0) throw ParseError(c.pos(), "negative exponent");
        deg = static_cast<std::size_t>(e);
      }
    } else if (!sawCoeff) {
      throw ParseError(c.pos(), "expected a coefficient or 't'");
    }
    addTerm(sign * coeff, deg);
    if (c.done() || c.peek() == stopA || c.peek() == stopB) break;
    if (c.peek() != '+' && c.peek() != '-')
      throw ParseError(c.pos(), "expected '+', '-' or end of polynomial");
  }
  if (p.empty()) p.push_back(0);
  return p;
}

}  // namespace

CoefRing parseRingSpec(const std::string& spec) {
  Cursor c(spec);
  if (!c.eatWord("Zmod:")) throw ParseError(c.pos(), "ring spec must start with 'Zmod:'");
  const long long m = c.integer();
  if (m < 2) throw ParseError(c.pos(), "modulus must be at least 2");
  Poly reducer{0, 1};  // plain case g = t
  if (c.eat('[')) {
    c.expect('t');
    c.expect(']');
    c.expect('/');
    c.expect('(');
    reducer = parsePoly(c, ')', ')');
    c.expect(')');
  }
  std::vector<Poly> gens;
  if (c.eat(';')) {
    if (!c.eatWord("n=")) throw ParseError(c.pos(), "expected 'n=' after ';'");
    gens.push_back(parsePoly(c, ',', '\0'));
    while (c.eat(',')) gens.push_back(parsePoly(c, ',', '\0'));
  }
  if (!c.done()) throw ParseError(c.pos(), "trailing characters in ring spec");
  return CoefRing::make(static_cast<unsigned>(m), std::move(reducer), std::move(gens));
}

PcGroup parseGroupName(const std::string& spec) {
  Cursor c(spec);
  if (c.eatWord("G(") || (spec.rfind("H(", 0) == 0 && c.eatWord("H("))) {
    const bool isG = spec[0] == 'G';
    const long long n = c.integer();
    c.expect(',');
    const long long m = c.integer();
    c.expect(',');
    const long long l = c.integer();
    c.expect(')');
    if (!c.done()) throw ParseError(c.pos(), "trailing characters in group spec");
    if (n < 0 || m < 0 || l < 0) throw ParseError(c.pos(), "parameters must be nonnegative");
    return isG ? familyG(static_cast<unsigned>(n), static_cast<unsigned>(m), static_cast<unsigned>(l))
               : familyH(static_cast<unsigned>(n), static_cast<unsigned>(m), static_cast<unsigned>(l));
  }
  if (c.eatWord("C2^")) {
    const long long n = c.integer();
    if (!c.done()) throw ParseError(c.pos(), "trailing characters in group spec");
    if (n < 0 || n > 13) throw ParseError(c.pos(), "exponent out of range");
    return cyclic2(static_cast<unsigned>(n));
  }
  if (spec == "D16") return dihedral16();
  throw ParseError(0, "unknown group name: " + spec);
}

PcGroup parsePcPresentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineNo = 0;
  PcPresentation pres;
  bool sawGens = false, sawOrders = false;

  auto parseWord = [&](std::istringstream& ls) {
    ExpVec w(pres.ngens(), 0);
    std::string tok;
    while (ls >> tok) {
      if (tok.empty() || tok[0] != 'x')
        throw ParseError(lineNo, "word tokens look like x<i> or x<i>^<e>");
      const std::size_t caret = tok.find('^');
      unsigned idx = 0, exp = 1;
      try {
        idx = static_cast<unsigned>(std::stoul(tok.substr(1, caret - 1)));
        if (caret != std::string::npos)
          exp = static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
      } catch (const std::exception&) {
        throw ParseError(lineNo, "malformed word token: " + tok);
      }
      if (idx < 1 || idx > pres.ngens()) throw ParseError(lineNo, "generator index out of range");
      w[idx - 1] += exp;
    }
    return w;
  };

  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    if (key == "gens") {
      unsigned r = 0;
      if (!(ls >> r) || r == 0 || r > 32) throw ParseError(lineNo, "gens needs a count in [1, 32]");
      pres.relOrders.assign(r, 0);
      pres.powerRhs.assign(r, ExpVec(r, 0));
      pres.conjRhs.assign(r, std::vector<ExpVec>(r, ExpVec(r, 0)));
      for (unsigned i = 0; i < r; ++i)
        for (unsigned j = i + 1; j < r; ++j) pres.conjRhs[i][j][j] = 1;
      sawGens = true;
    } else if (key == "orders") {
      if (!sawGens) throw ParseError(lineNo, "orders must follow gens");
      for (auto& o : pres.relOrders)
        if (!(ls >> o)) throw ParseError(lineNo, "orders needs one value per generator");
      sawOrders = true;
    } else if (key == "pow") {
      if (!sawOrders) throw ParseError(lineNo, "pow must follow orders");
      unsigned i = 0;
      std::string eq;
      if (!(ls >> i >> eq) || eq != "=" || i < 1 || i > pres.ngens())
        throw ParseError(lineNo, "pow syntax: pow <i> = <word>");
      pres.powerRhs[i - 1] = parseWord(ls);
    } else if (key == "conj") {
      if (!sawOrders) throw ParseError(lineNo, "conj must follow orders");
      unsigned j = 0, i = 0;
      std::string eq;
      if (!(ls >> j >> i >> eq) || eq != "=" || i < 1 || j <= i || j > pres.ngens())
        throw ParseError(lineNo, "conj syntax: conj <j> <i> = <word> with j > i");
      pres.conjRhs[i - 1][j - 1] = parseWord(ls);
    } else {
      throw ParseError(lineNo, "unknown directive: " + key);
    }
  }
  if (!sawOrders) throw ParseError(lineNo, "presentation needs gens and orders");
  pres.name = "custom";
  try {
    PcGroup g(std::move(pres));
    if (!g.checkConsistency(20000)) fail(Err::ValidationError, "presentation is not consistent");
    return g;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw Error(Err::ValidationError, std::string("invalid presentation: ") + e.what());
  }
}

std::string printPcPresentation(const PcPresentation& pres) {
  std::ostringstream os;
  const unsigned r = pres.ngens();
  os << "gens " << r << "\n";
  os << "orders";
  for (const unsigned o : pres.relOrders) os << " " << o;
  os << "\n";
  auto word = [&](const ExpVec& w) {
    std::ostringstream ws;
    for (unsigned i = 0; i < r; ++i)
      if (w[i]) ws << " x" << (i + 1) << "^" << w[i];
    return ws.str();
  };
  for (unsigned i = 0; i < r; ++i) os << "pow " << (i + 1) << " =" << word(pres.powerRhs[i]) << "\n";
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = i + 1; j < r; ++j)
      os << "conj " << (j + 1) << " " << (i + 1) << " =" << word(pres.conjRhs[i][j]) << "\n";
  return os.str();
}

}  // namespace mga
