#ifndef NCSING_REPORT_HPP
#define NCSING_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "ncsing/classify.hpp"

namespace ncsing {

/// Everything one pipeline run produces, ready for serialization. The JSON
/// layout (stable field names) is
///   {input, vars, cap, generators[], rules[], certificate, coranks[],
///    dimension:{kind,...}, jdim:{kind}, type:{coarse,candidates[],situation},
///    millis}
struct Report {
  std::string input;  // formatted echo of the parsed potential
  Alphabet vars;
  int cap;
  std::vector<std::string> generators;
  std::vector<std::string> rules;
  Certificate certificate;
  std::vector<Count> coranks;
  DimensionVerdict dimension;
  JdimVerdict jdim;
  std::optional<TypeClass> type;  // present for classify runs
  long long millis = 0;
};

Report make_report(const Potential& f, const Analysis& analysis,
                   const std::optional<TypeClass>& type, long long millis);

nlohmann::json to_json(const Report& report);
std::string to_text(const Report& report);

std::string certificate_name(Certificate c);
std::string coarse_name(CoarseType t);
std::string situation_name(Situation s);
std::string jdim_name(JdimVerdict v);

}  // namespace ncsing

#endif
