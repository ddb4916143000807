#include "ncsing/jet.hpp"

#include "ncsing/errors.hpp"

namespace ncsing {

NcJet::NcJet(Alphabet alphabet, int cap) : alphabet_(std::move(alphabet)), cap_(cap) {
  if (cap_ <= 0) throw DomainError("truncation cap must be positive");
}

NcJet NcJet::constant(const Alphabet& alphabet, int cap, const Q& value) {
  NcJet jet(alphabet, cap);
  jet.add_term(Word(), value);
  return jet;
}

NcJet NcJet::variable(const Alphabet& alphabet, int cap, Letter v) {
  if (v >= alphabet.size()) throw DomainError("letter index out of range");
  NcJet jet(alphabet, cap);
  jet.add_term(Word(1, v), 1);
  return jet;
}

NcJet NcJet::monomial(const Alphabet& alphabet, int cap, const Word& w, const Q& coeff) {
  for (Letter l : w) {
    if (l >= alphabet.size()) throw DomainError("letter index out of range");
  }
  NcJet jet(alphabet, cap);
  jet.add_term(w, coeff);
  return jet;
}

Q NcJet::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Q(0) : it->second;
}

void NcJet::add_term(const Word& w, const Q& c) {
  if (sgn(c) == 0) return;
  if (static_cast<int>(degree(w)) > cap_) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::pair<Word, Q> NcJet::leading_term() const {
  if (terms_.empty()) throw DomainError("zero jet has no leading term");
  return *terms_.begin();
}

int NcJet::order() const {
  if (terms_.empty()) return cap_ + 1;
  return static_cast<int>(degree(terms_.begin()->first));
}

int NcJet::top_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree(terms_.rbegin()->first));
}

void NcJet::check_compatible(const NcJet& other) const {
  if (cap_ != other.cap_) throw DomainError("truncation cap mismatch");
  if (alphabet_ != other.alphabet_) throw DomainError("alphabet mismatch");
}

NcJet& NcJet::operator+=(const NcJet& rhs) {
  check_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NcJet& NcJet::operator-=(const NcJet& rhs) {
  check_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NcJet NcJet::operator-() const {
  NcJet out(alphabet_, cap_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

NcJet& NcJet::scale(const Q& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

bool NcJet::operator==(const NcJet& rhs) const {
  return cap_ == rhs.cap_ && alphabet_ == rhs.alphabet_ && terms_ == rhs.terms_;
}

NcJet operator+(NcJet lhs, const NcJet& rhs) {
  lhs += rhs;
  return lhs;
}

NcJet operator-(NcJet lhs, const NcJet& rhs) {
  lhs -= rhs;
  return lhs;
}

NcJet operator*(const Q& c, NcJet jet) {
  jet.scale(c);
  return jet;
}

NcJet mul(const NcJet& a, const NcJet& b) {
  a.check_compatible(b);
  NcJet out(a.alphabet_, a.cap_);
  for (const auto& [u, cu] : a.terms_) {
    const int budget = a.cap_ - static_cast<int>(degree(u));
    if (budget < 0) continue;
    for (const auto& [v, cv] : b.terms_) {
      // terms are degree-sorted leading-first, so once v is too long we stop
      if (static_cast<int>(degree(v)) > budget) break;
      out.add_term(u + v, cu * cv);
    }
  }
  return out;
}

NcJet operator*(const NcJet& a, const NcJet& b) { return mul(a, b); }

NcJet pow(const NcJet& a, unsigned exponent) {
  NcJet out = NcJet::constant(a.alphabet(), a.cap(), 1);
  for (unsigned i = 0; i < exponent; ++i) out = mul(out, a);
  return out;
}

NcJet with_cap(const NcJet& a, int cap) {
  NcJet out(a.alphabet(), cap);
  for (const auto& [w, c] : a.terms()) out.add_term(w, c);
  return out;
}

std::pair<Word, Q> leading_term(const NcJet& f, const LocalOrder& order) {
  if (order.alphabet != f.alphabet()) throw DomainError("alphabet mismatch");
  return f.leading_term();
}

}  // namespace ncsing
