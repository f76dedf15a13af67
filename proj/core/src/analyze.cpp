#include "replim/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "replim/bounds.hpp"
#include "replim/schemas.hpp"

namespace replim {

namespace {

// 32 log-spaced q values across the problem's feasible range
std::vector<std::uint64_t> bound_samples(const Problem& problem) {
    std::uint64_t q_min = 2;
    std::uint64_t q_max = input_count(problem);
    std::vector<std::uint64_t> qs;
    double lo = std::log2(static_cast<double>(q_min));
    double hi = std::log2(static_cast<double>(q_max));
    for (int i = 0; i < 32; ++i) {
        double t = lo + (hi - lo) * i / 31.0;
        auto q = static_cast<std::uint64_t>(std::llround(std::exp2(t)));
        q = std::clamp(q, q_min, q_max);
        if (qs.empty() || qs.back() != q) qs.push_back(q);
    }
    return qs;
}

}  // namespace

Analysis analyze(const Problem& problem, const std::vector<std::string>& schema_specs) {
    Analysis analysis;
    for (const std::string& spec : schema_specs) {
        MappingSchema schema = parse_schema(problem, spec);
        SchemaReport report = verify_schema(problem, schema);
        analysis.all_ok = analysis.all_ok && report.coverage_ok && report.q_ok;
        TradeoffRow row;
        row.schema = schema.spec;
        row.q = report.q_max_observed;
        row.log2_q = std::log2(static_cast<double>(report.q_max_observed));
        row.p = report.p;
        row.r_achieved = report.r.value();
        row.r_lower_bound = report.lower_bound;
        row.ratio = report.ratio;
        analysis.rows.push_back(row);
        analysis.reports.push_back(report);
    }
    for (std::uint64_t q : bound_samples(problem)) {
        double bound = rate_lower_bound(problem, q);
        TradeoffRow row;
        row.schema = "lower_bound";
        row.q = q;
        row.log2_q = std::log2(static_cast<double>(q));
        row.p = 0;
        row.r_achieved = bound;
        row.r_lower_bound = bound;
        row.ratio = 1.0;
        analysis.rows.push_back(row);
    }
    std::sort(analysis.rows.begin(), analysis.rows.end(),
              [](const TradeoffRow& a, const TradeoffRow& b) {
                  return std::tie(a.schema, a.q) < std::tie(b.schema, b.q);
              });
    return analysis;
}

void write_csv(std::ostream& out, const std::vector<TradeoffRow>& rows) {
    out << "schema,q,log2_q,p,r_achieved,r_lower_bound,ratio\n";
    char buf[64];
    auto fixed6 = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return std::string(buf);
    };
    for (const TradeoffRow& row : rows) {
        out << row.schema << ',' << row.q << ',' << fixed6(row.log2_q) << ','
            << row.p << ',' << fixed6(row.r_achieved) << ','
            << fixed6(row.r_lower_bound) << ',' << fixed6(row.ratio) << '\n';
    }
}

}  // namespace replim
