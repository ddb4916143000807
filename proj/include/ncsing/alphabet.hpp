#ifndef NCSING_ALPHABET_HPP
#define NCSING_ALPHABET_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncsing/word.hpp"

namespace ncsing {

/// An ordered list of distinct variable names. The declared order is the
/// letter order used for lexicographic tie-breaking, so it is part of the
/// mathematical data, not just presentation.
///
/// Cheap to copy (shared immutable storage); equality compares name lists.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> names);

  /// Parses "x,y,z" (whitespace around names ignored).
  static Alphabet split_names(const std::string& comma_separated);

  std::size_t size() const { return names_->size(); }
  const std::string& name(Letter i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<Letter> find(const std::string& name) const;

  bool operator==(const Alphabet& other) const {
    return names_ == other.names_ || *names_ == *other.names_;
  }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace ncsing

#endif
