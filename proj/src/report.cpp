#include "ncsing/report.hpp"

#include <sstream>

#include "ncsing/parser.hpp"

namespace ncsing {

namespace {

nlohmann::json count_json(const Count& c) {
  if (c.fits_slong_p()) return nlohmann::json(c.get_si());
  return nlohmann::json(c.get_str());
}

std::string rule_text(const Rule& rule) {
  NcJet p = rule.tail;
  p.add_term(rule.lead, 1);
  return format(p);
}

}  // namespace

std::string certificate_name(Certificate c) {
  return c == Certificate::Exact ? "exact" : "truncated-at-cap";
}

std::string coarse_name(CoarseType t) {
  switch (t) {
    case CoarseType::A: return "A";
    case CoarseType::D: return "D";
    case CoarseType::E6: return "E6";
    case CoarseType::EOther: return "E-other";
    case CoarseType::Unclassified: return "unclassified";
  }
  return "?";
}

std::string situation_name(Situation s) {
  switch (s) {
    case Situation::Flopping: return "flopping";
    case Situation::DivisorToCurve: return "divisor-to-curve";
    case Situation::Unknown: return "unknown";
  }
  return "?";
}

std::string jdim_name(JdimVerdict v) {
  switch (v) {
    case JdimVerdict::Zero: return "0";
    case JdimVerdict::One: return "1";
    case JdimVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Report make_report(const Potential& f, const Analysis& analysis,
                   const std::optional<TypeClass>& type, long long millis) {
  Report report{format(f.jet()),
                f.alphabet(),
                analysis.report.cap,
                {},
                {},
                analysis.report.certificate,
                analysis.report.coranks,
                analysis.report.dimension,
                analysis.report.jdim,
                type,
                millis};
  for (const auto& g : analysis.generators.by_variable) {
    report.generators.push_back(format(g));
  }
  for (const auto& r : analysis.system.rules) {
    report.rules.push_back(rule_text(r));
  }
  return report;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json j;
  j["input"] = report.input;
  j["vars"] = report.vars.names();
  j["cap"] = report.cap;
  j["generators"] = report.generators;
  j["rules"] = report.rules;
  j["certificate"] = certificate_name(report.certificate);
  nlohmann::json coranks = nlohmann::json::array();
  for (const auto& c : report.coranks) coranks.push_back(count_json(c));
  j["coranks"] = coranks;

  nlohmann::json dim;
  switch (report.dimension.kind) {
    case DimensionKind::Finite:
      dim["kind"] = "finite";
      dim["value"] = count_json(report.dimension.value);
      break;
    case DimensionKind::Infinite:
      dim["kind"] = "infinite";
      if (report.dimension.growth == GrowthKind::Exponential) {
        dim["growth"] = "exponential";
      } else {
        dim["growth"] = "polynomial";
        dim["value"] = report.dimension.growth_degree;
      }
      break;
    case DimensionKind::Inconclusive:
      dim["kind"] = "inconclusive";
      break;
  }
  j["dimension"] = dim;
  j["jdim"] = nlohmann::json{{"kind", jdim_name(report.jdim)}};

  if (report.type) {
    nlohmann::json type;
    type["coarse"] = coarse_name(report.type->coarse);
    nlohmann::json candidates = nlohmann::json::array();
    for (const auto& tag : report.type->candidates) candidates.push_back(tag_name(tag));
    type["candidates"] = candidates;
    type["situation"] = situation_name(report.type->situation);
    j["type"] = type;
  }
  j["millis"] = report.millis;
  return j;
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  auto line = [&](const std::string& label, const std::string& value) {
    out << label;
    for (std::size_t i = label.size(); i < 14; ++i) out << ' ';
    out << value << '\n';
  };
  auto multiline = [&](const std::string& label, const std::vector<std::string>& values) {
    if (values.empty()) {
      line(label, "(none)");
      return;
    }
    line(label, values.front());
    for (std::size_t i = 1; i < values.size(); ++i) line("", values[i]);
  };

  line("input:", report.input);
  {
    std::string vars;
    for (std::size_t i = 0; i < report.vars.size(); ++i) {
      if (i) vars += ", ";
      vars += report.vars.name(static_cast<Letter>(i));
    }
    line("vars:", vars);
  }
  line("cap:", std::to_string(report.cap));
  multiline("generators:", report.generators);
  multiline("rules:", report.rules);
  line("certificate:", certificate_name(report.certificate));
  {
    std::string c;
    for (std::size_t i = 0; i < report.coranks.size(); ++i) {
      if (i) c += ' ';
      c += report.coranks[i].get_str();
    }
    line("coranks:", c);
  }
  switch (report.dimension.kind) {
    case DimensionKind::Finite:
      line("dimension:", "finite " + report.dimension.value.get_str());
      break;
    case DimensionKind::Infinite:
      if (report.dimension.growth == GrowthKind::Exponential) {
        line("dimension:", "infinite (exponential growth)");
      } else {
        line("dimension:",
             "infinite (growth degree " + std::to_string(report.dimension.growth_degree) + ")");
      }
      break;
    case DimensionKind::Inconclusive:
      line("dimension:", "inconclusive");
      break;
  }
  line("jdim:", jdim_name(report.jdim));
  if (report.type) {
    line("type:", coarse_name(report.type->coarse));
    std::vector<std::string> names;
    for (const auto& tag : report.type->candidates) names.push_back(tag_name(tag));
    multiline("candidates:", names);
    line("situation:", situation_name(report.type->situation));
  }
  line("millis:", std::to_string(report.millis));
  return out.str();
}

}  // namespace ncsing
