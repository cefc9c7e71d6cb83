#include "lcs/reports.hpp"

#include <sstream>

#include "json.hpp"
#include "lcs/errors.hpp"
#include "lcs/presentation_io.hpp"

namespace lcs {

using Json = nlohmann::ordered_json;

ReportFormat parse_format(const std::string& s) {
  if (s == "tsv") return ReportFormat::Tsv;
  if (s == "json") return ReportFormat::Json;
  throw UsageError("unknown format '" + s + "' (expected tsv or json)");
}

namespace {

std::string weight_str(const std::vector<int>& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + ")";
}

Json presentation_json(const Presentation& p) {
  Json j;
  j["generators"] = Json::array();
  for (const auto& g : p.generators)
    j["generators"].push_back(Json{{"name", g.name}, {"degree", g.degree}});
  j["relations"] = Json::array();
  for (const auto& r : p.relations) j["relations"].push_back(r.str(p.generators));
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string dims_report(const Presentation& pres, const DimTable& table,
                        ReportFormat fmt) {
  if (fmt == ReportFormat::Tsv) {
    std::ostringstream os;
    os << "k\td\tdimL\tdimM\tdimB\tdimN\n";
    for (const auto& r : table.rows)
      os << r.k << '\t' << r.d << '\t' << r.dimL << '\t' << r.dimM << '\t'
         << r.dimB << '\t' << r.dimN << '\n';
    return os.str();
  }
  Json j;
  j["schema"] = "1";
  j["command"] = "dims";
  j["presentation"] = presentation_json(pres);
  j["kmax"] = table.kmax;
  j["maxdeg"] = table.maxdeg;
  j["rows"] = Json::array();
  for (const auto& r : table.rows)
    j["rows"].push_back(Json{{"k", r.k},
                             {"d", r.d},
                             {"dimL", r.dimL},
                             {"dimM", r.dimM},
                             {"dimB", r.dimB},
                             {"dimN", r.dimN}});
  return dump(j);
}

std::string fiber_report(const FiberReportData& data, ReportFormat fmt) {
  // Weight histogram per degree, in map order.
  std::map<int, std::map<std::vector<int>, int>> weights;
  for (const auto& [d, vecs] : data.fiber.perdegree)
    for (const auto& v : vecs) weights[d][v.weight]++;

  if (fmt == ReportFormat::Tsv) {
    std::ostringstream os;
    os << "# k\t" << data.fiber.k << "\n";
    os << "# maxdeg\t" << data.fiber.maxdeg << "\n";
    os << "# total_dim\t" << data.fiber.total_dim << "\n";
    os << "# stabilized\t" << bool_str(data.fiber.stabilized) << "\n";
    os << "# schur\t";
    bool first = true;
    for (const auto& [lam, m] : data.schur.mult) {
      if (!first) os << ' ';
      os << partition_str(lam) << ':' << m;
      first = false;
    }
    os << "\n";
    os << "# kerchev_bound\t" << data.kerchev_bound << "\n";
    os << "# kerchev_ok\t" << bool_str(data.kerchev_ok) << "\n";
    os << "# max_active_weight_shift\t" << data.max_active_weight_shift << "\n";
    if (data.has_witness)
      os << "# nonsplit_witness\t" << bool_str(data.witness.holds()) << "\n";
    os << "d\tweight\tcount\n";
    for (const auto& [d, hist] : weights)
      for (const auto& [w, c] : hist)
        os << d << '\t' << weight_str(w) << '\t' << c << '\n';
    return os.str();
  }

  Json j;
  j["schema"] = "1";
  j["command"] = "fiber";
  j["presentation"] = presentation_json(data.pres);
  j["k"] = data.fiber.k;
  j["maxdeg"] = data.fiber.maxdeg;
  j["total_dim"] = data.fiber.total_dim;
  j["stabilized"] = data.fiber.stabilized;
  j["perdegree"] = Json::array();
  for (const auto& [d, hist] : weights) {
    Json w = Json::object();
    int dim = 0;
    for (const auto& [e, c] : hist) {
      w[weight_str(e)] = c;
      dim += c;
    }
    j["perdegree"].push_back(Json{{"d", d}, {"dim", dim}, {"weights", w}});
  }
  Json ch = Json::object();
  for (const auto& [e, c] : data.character.coeffs) ch[weight_str(e)] = c;
  j["character"] = ch;
  Json sch = Json::object();
  for (const auto& [lam, m] : data.schur.mult) sch[partition_str(lam)] = m;
  j["schur"] = sch;
  j["kerchev_bound"] = data.kerchev_bound;
  j["kerchev_ok"] = data.kerchev_ok;
  j["max_active_weight_shift"] = data.max_active_weight_shift;
  if (data.has_witness) j["nonsplit_witness"] = data.witness.holds();
  return dump(j);
}

std::string verify_report(const Presentation& pres,
                          const ContainmentReport& containments,
                          const std::vector<VerifyPropertyRow>& properties,
                          uint64_t seed, ReportFormat fmt) {
  if (fmt == ReportFormat::Tsv) {
    std::ostringstream os;
    os << "# seed\t" << seed << "\n";
    os << "claim\tmaxdeg\tchecked\tresult\n";
    for (const auto& c : containments.checks)
      os << c.claim << '\t' << c.maxdeg << '\t' << c.checked << '\t'
         << (c.passed ? "PASS" : "FAIL") << '\n';
    for (const auto& p : properties)
      os << p.claim << "\t-\t" << p.checked << '\t'
         << (p.passed ? "PASS" : "FAIL") << '\n';
    return os.str();
  }
  Json j;
  j["schema"] = "1";
  j["command"] = "verify";
  j["presentation"] = presentation_json(pres);
  j["seed"] = seed;
  j["checks"] = Json::array();
  for (const auto& c : containments.checks)
    j["checks"].push_back(Json{{"claim", c.claim},
                               {"maxdeg", c.maxdeg},
                               {"checked", c.checked},
                               {"result", c.passed ? "PASS" : "FAIL"}});
  for (const auto& p : properties)
    j["checks"].push_back(Json{{"claim", p.claim},
                               {"maxdeg", nullptr},
                               {"checked", p.checked},
                               {"result", p.passed ? "PASS" : "FAIL"}});
  return dump(j);
}

std::string hilbert_report(const Presentation& pres, int k,
                           const std::vector<long long>& dims,
                           const SeriesFit& fit, ReportFormat fmt) {
  std::vector<long long> expanded = expand_series(fit, fit.fit_to);
  if (fmt == ReportFormat::Tsv) {
    std::ostringstream os;
    os << "# k\t" << k << "\n";
    os << "# numerator\t" << series_numerator_str(fit) << "\n";
    os << "# denominator\t" << series_denominator_str(fit) << "\n";
    os << "# exponent\t" << fit.denom_exponent << "\n";
    os << "# stable\t" << bool_str(fit.stable) << "\n";
    os << "d\tdim\texpanded\n";
    for (int d = 0; d <= fit.fit_to; ++d)
      os << d << '\t' << dims[static_cast<std::size_t>(d)] << '\t'
         << expanded[static_cast<std::size_t>(d)] << '\n';
    return os.str();
  }
  Json j;
  j["schema"] = "1";
  j["command"] = "hilbert";
  j["presentation"] = presentation_json(pres);
  j["k"] = k;
  j["numerator"] = fit.numerator;
  j["numerator_str"] = series_numerator_str(fit);
  j["denominator_str"] = series_denominator_str(fit);
  j["denominator_degrees"] = fit.denom_degrees;
  j["denominator_exponent"] = fit.denom_exponent;
  j["stable"] = fit.stable;
  j["fit_window"] = Json::array({fit.fit_from, fit.fit_to});
  j["dims"] = dims;
  j["expanded"] = expanded;
  return dump(j);
}

std::string fscheck_report(const Presentation& pres,
                           const std::vector<FsCheckRow>& rows,
                           ReportFormat fmt) {
  if (fmt == ReportFormat::Tsv) {
    std::ostringstream os;
    os << "d\tdim_words_side\tdim_forms_side\trank_fs\tkernel_equals_M3\tresult\n";
    for (const auto& r : rows)
      os << r.d << '\t' << r.dim_words_side << '\t' << r.dim_forms_side << '\t'
         << r.rank_fs << '\t' << bool_str(r.kernel_equals_m3) << '\t'
         << (r.pass ? "PASS" : "FAIL") << '\n';
    return os.str();
  }
  Json j;
  j["schema"] = "1";
  j["command"] = "fs-check";
  j["presentation"] = presentation_json(pres);
  j["rows"] = Json::array();
  for (const auto& r : rows)
    j["rows"].push_back(Json{{"d", r.d},
                             {"dim_words_side", r.dim_words_side},
                             {"dim_forms_side", r.dim_forms_side},
                             {"rank_fs", r.rank_fs},
                             {"kernel_equals_M3", r.kernel_equals_m3},
                             {"result", r.pass ? "PASS" : "FAIL"}});
  return dump(j);
}

}  // namespace lcs
