#include "blockinv/report.hpp"

#include "blockinv/error.hpp"

#include <json.hpp>

#include <sstream>

namespace blockinv {

using ojson = nlohmann::ordered_json;

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "markdown" || name == "md") return ReportFormat::Markdown;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + name + "' (json, csv, markdown)");
}

namespace {

ojson quantity_json(const Quantity& q) {
  return ojson{{"value", to_string(q.value)}, {"kind", value_kind_name(q.kind)}, {"detail", q.detail}};
}

ojson count_json(const SourcedCount& c) {
  return ojson{{"value", to_string(c.value)}, {"source", source_name(c.source)}, {"detail", c.detail}};
}

ojson report_json(const ConjectureReport& r) {
  const BlockParams& p = r.params;
  ojson j;
  j["mode"] = mode_name(r.mode);
  j["ell"] = p.ell;
  j["case"] = p.ell == 2 ? ojson(case_name(p.case2)) : ojson(nullptr);
  j["a"] = p.a;
  j["atilde"] = p.atilde ? ojson(*p.atilde) : ojson(nullptr);
  j["d"] = p.d;
  j["w"] = p.w;
  j["digits"] = p.digits;
  if (r.mode == Mode::SL) {
    j["m"] = r.sl.m;
    j["delta"] = r.sl.delta;
  }
  j["kB"] = quantity_json(r.kB);
  j["k0B"] = quantity_json(r.k0B);
  j["lB"] = quantity_json(r.lB);
  j["kD"] = count_json(r.kD);
  j["kDprime"] = count_json(r.kDprime);
  j["c1"] = ojson{{"verdict", conj_verdict_name(r.c1)}, {"reason", r.c1_reason}};
  j["c2"] = ojson{{"verdict", conj_verdict_name(r.c2)}, {"reason", r.c2_reason}};
  j["error"] = r.error;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string group_label(const ConjectureReport& r) {
  const BlockParams& p = r.params;
  std::ostringstream os;
  if (r.mode == Mode::SL) {
    os << "SL, ell=3, a=" << p.a;
    return os.str();
  }
  os << "GL, ell=" << p.ell;
  if (p.ell == 2) os << ", case=" << case_name(p.case2);
  os << ", a=" << p.a;
  if (p.ell == 2 && p.case2 == Case2::ThreeMod4) os << ", atilde=" << *p.atilde;
  if (p.ell == 3) os << ", d=" << p.d;
  return os.str();
}

std::string summary_line(const std::vector<ConjectureReport>& reports) {
  std::size_t verified = 0, inconclusive = 0, violated = 0;
  for (const auto& r : reports) {
    const bool v = r.c1 == ConjVerdict::Violated || r.c2 == ConjVerdict::Violated;
    const bool i = r.c1 == ConjVerdict::Inconclusive || r.c2 == ConjVerdict::Inconclusive;
    if (v) ++violated;
    else if (i) ++inconclusive;
    else ++verified;
  }
  std::ostringstream os;
  os << reports.size() << " points: " << verified << " verified, " << inconclusive << " inconclusive, " << violated
     << " violated";
  return os.str();
}

}  // namespace

std::string emit_report(const std::vector<ConjectureReport>& reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      ojson arr = ojson::array();
      std::size_t verified = 0, inconclusive = 0, violated = 0;
      for (const auto& r : reports) {
        arr.push_back(report_json(r));
        if (r.c1 == ConjVerdict::Violated || r.c2 == ConjVerdict::Violated) ++violated;
        else if (r.c1 == ConjVerdict::Inconclusive || r.c2 == ConjVerdict::Inconclusive) ++inconclusive;
        else ++verified;
      }
      ojson doc;
      doc["reports"] = std::move(arr);
      doc["summary"] = ojson{{"points", reports.size()},
                             {"verified", verified},
                             {"inconclusive", inconclusive},
                             {"violated", violated},
                             {"exit_code", exit_code(reports)}};
      return doc.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::ostringstream os;
      os << "mode,ell,case,a,atilde,d,w,kB,kB_kind,k0B,k0B_kind,lB,lB_kind,kD,kD_source,kDprime,kDprime_source,c1,c2,"
            "error\n";
      for (const auto& r : reports) {
        const BlockParams& p = r.params;
        os << mode_name(r.mode) << ',' << p.ell << ',' << (p.ell == 2 ? case_name(p.case2) : "") << ',' << p.a << ','
           << (p.atilde ? std::to_string(*p.atilde) : "") << ',' << p.d << ',' << p.w << ',' << to_string(r.kB.value)
           << ',' << value_kind_name(r.kB.kind) << ',' << to_string(r.k0B.value) << ',' << value_kind_name(r.k0B.kind)
           << ',' << to_string(r.lB.value) << ',' << value_kind_name(r.lB.kind) << ',' << to_string(r.kD.value) << ','
           << source_name(r.kD.source) << ',' << to_string(r.kDprime.value) << ',' << source_name(r.kDprime.source)
           << ',' << conj_verdict_name(r.c1) << ',' << conj_verdict_name(r.c2) << ',' << csv_field(r.error) << '\n';
      }
      return os.str();
    }
    case ReportFormat::Markdown: {
      std::ostringstream os;
      std::string current;
      bool any = false;
      for (const auto& r : reports) {
        const std::string g = group_label(r);
        if (!any || g != current) {
          if (any) os << '\n';
          os << "### " << g << "\n\n";
          os << "| w | k^w(B) | lower bound for k0(B)*k(D') | lower bound for l(B)*k(D) | C1 | C2 |\n";
          os << "|---|---|---|---|---|---|\n";
          current = g;
          any = true;
        }
        const std::string kb = (r.kB.kind == ValueKind::UpperBound ? "<= " : "") + to_string(r.kB.value);
        os << "| " << r.params.w << " | " << kb << " | " << to_string(Nat(r.k0B.value * r.kDprime.value)) << " | "
           << to_string(Nat(r.lB.value * r.kD.value)) << " | " << conj_verdict_name(r.c1) << " | "
           << conj_verdict_name(r.c2) << " |\n";
      }
      if (any) os << '\n';
      os << summary_line(reports) << "\n";
      return os.str();
    }
  }
  throw InternalError("unhandled report format");
}

}  // namespace blockinv
