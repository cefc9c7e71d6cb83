#pragma once

#include <string>

#include "lcs/chardec.hpp"
#include "lcs/hilbert.hpp"
#include "lcs/lcs.hpp"
#include "lcs/star.hpp"

namespace lcs {

enum class ReportFormat { Tsv, Json };

ReportFormat parse_format(const std::string& s);

struct VerifyPropertyRow {
  std::string claim;
  long checked = 0;
  bool passed = true;
};

struct FiberReportData {
  Presentation pres;
  StandardFiber fiber;
  Character character;
  SchurDecomp schur;
  int kerchev_bound = 0;
  bool kerchev_ok = true;
  int max_active_weight_shift = 0;
  bool has_witness = false;
  NonSplitWitness witness;
};

struct FsCheckRow {
  int d = 0;
  int dim_words_side = 0;  // dim A(d) - dim M_3(d)
  int dim_forms_side = 0;  // dim of even forms in degree d
  int rank_fs = 0;
  bool kernel_equals_m3 = false;
  bool pass = false;
};

std::string dims_report(const Presentation& pres, const DimTable& table,
                        ReportFormat fmt);
std::string fiber_report(const FiberReportData& data, ReportFormat fmt);
std::string verify_report(const Presentation& pres,
                          const ContainmentReport& containments,
                          const std::vector<VerifyPropertyRow>& properties,
                          uint64_t seed, ReportFormat fmt);
std::string hilbert_report(const Presentation& pres, int k,
                           const std::vector<long long>& dims,
                           const SeriesFit& fit, ReportFormat fmt);
std::string fscheck_report(const Presentation& pres,
                           const std::vector<FsCheckRow>& rows,
                           ReportFormat fmt);

}  // namespace lcs
