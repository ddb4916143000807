#include "ncsing/alphabet.hpp"

#include <cctype>
#include <set>

#include "ncsing/errors.hpp"

namespace ncsing {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])))) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) {
  if (names.empty()) throw DomainError("alphabet must declare at least one variable");
  if (names.size() > 255) throw DomainError("alphabet too large");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_name(n)) throw DomainError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Alphabet Alphabet::split_names(const std::string& comma_separated) {
  std::vector<std::string> names;
  std::string current;
  auto flush = [&] {
    std::size_t b = current.find_first_not_of(" \t");
    std::size_t e = current.find_last_not_of(" \t");
    names.push_back(b == std::string::npos ? "" : current.substr(b, e - b + 1));
    current.clear();
  };
  for (char c : comma_separated) {
    if (c == ',') flush();
    else current.push_back(c);
  }
  flush();
  return Alphabet(std::move(names));
}

std::optional<Letter> Alphabet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

}  // namespace ncsing
