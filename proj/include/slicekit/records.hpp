#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "slicekit/analysis.hpp"
#include "slicekit/thresholds.hpp"

namespace slicekit {

/// Header line opening every machine-readable document.
inline constexpr std::string_view kRecordsVersion = "slicekit/1";

/// One ValueSet per non-blank line; '#' starts a comment. ParseError carries
/// the file line. An input without any set is an error.
std::vector<ValueSet> parse_value_set_list(std::string_view text);

std::string write_table_records(const std::vector<ThresholdRow>& rows);
std::vector<ThresholdRow> parse_table_records(std::string_view text);
std::string render_table_human(const std::vector<ThresholdRow>& rows);

/// Polynomial line in the text grammar followed by a `support {...}` line.
std::string write_sparse_representation(const SparseRepresentation& s);

/// `min_size <m> witness {...}`.
std::string write_junta_report(const JuntaReport& r);

std::string write_analysis_records(const AnalysisReport& r);
std::string render_analysis_human(const AnalysisReport& r);

std::string write_construction_records(const ConstructionBundle& b);
std::string render_construction_human(const ConstructionBundle& b);

std::string write_verification_records(const VerificationReport& r);
std::string render_verification_human(const VerificationReport& r);

std::string write_decomposition_records(const SliceTable& f, const DecompositionReport& r);
std::string render_decomposition_human(const SliceTable& f, const DecompositionReport& r);

}  // namespace slicekit
