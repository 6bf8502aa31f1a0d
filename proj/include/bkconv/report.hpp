#ifndef BKCONV_REPORT_HPP
#define BKCONV_REPORT_HPP

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bkconv/admissibility.hpp"
#include "bkconv/besselgen.hpp"
#include "bkconv/subordination.hpp"

namespace bkconv {

enum class ReportFormat { Table, JsonLines, Csv };

/// One row of the verification report stream.
struct ReportRecord {
    std::string case_name;
    std::string params; // "p=...,b=...,c=..." or closed-form tag
    double premise_sup = 0.0;
    double conclusion_sup = 0.0;
    double bound = 0.0;
    double margin = 0.0;
    Complex worst_z = 0.0;
    bool pass = false;
};

inline std::string format_complex(Complex z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

inline std::string format_params(const BesselParams& bp) {
    return "p=" + format_complex(bp.p) + ";b=" + format_complex(bp.b) +
           ";c=" + format_complex(bp.c);
}

inline ReportRecord make_record(const VerifyReport& rep, const std::string& params) {
    ReportRecord r;
    r.case_name = case_name(rep.id);
    r.params = params;
    r.premise_sup = rep.premise_sup;
    r.conclusion_sup = rep.conclusion_sup;
    r.bound = rep.bound;
    r.margin = rep.margin;
    r.worst_z = rep.worst_z;
    r.pass = rep.pass;
    return r;
}

// CSV columns, in the report-record order.
inline constexpr const char* kCsvHeader =
    "case,params,premise_sup,conclusion_sup,bound,margin,worst_z,pass";

inline void write_record(std::ostream& os, const ReportRecord& r, ReportFormat fmt) {
    switch (fmt) {
        case ReportFormat::JsonLines: {
            nlohmann::json j;
            j["case"] = r.case_name;
            j["params"] = r.params;
            j["premise_sup"] = r.premise_sup;
            j["conclusion_sup"] = r.conclusion_sup;
            j["bound"] = r.bound;
            j["margin"] = r.margin;
            j["worst_z"] = format_complex(r.worst_z);
            j["pass"] = r.pass;
            os << j.dump() << '\n';
            break;
        }
        case ReportFormat::Csv: {
            char buf[256];
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g", r.premise_sup,
                          r.conclusion_sup, r.bound, r.margin);
            os << r.case_name << ",\"" << r.params << "\"," << buf << ','
               << format_complex(r.worst_z) << ',' << (r.pass ? "true" : "false") << '\n';
            break;
        }
        case ReportFormat::Table: {
            char buf[512];
            std::snprintf(buf, sizeof(buf), "%-16s %-40s %13.6e %13.6e %13.6e %+13.6e  %s",
                          r.case_name.c_str(), r.params.c_str(), r.premise_sup,
                          r.conclusion_sup, r.bound, r.margin, r.pass ? "PASS" : "FAIL");
            os << buf << '\n';
            break;
        }
    }
}

inline void write_table_header(std::ostream& os) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%-16s %-40s %13s %13s %13s %14s  %s", "case", "params",
                  "premise_sup", "concl_sup", "bound", "margin", "result");
    os << buf << '\n';
}

// Violating audit points as CSV rows.
inline void write_audit_violations_csv(std::ostream& os, const AuditReport& rep) {
    os << "theta,k,L_re,L_im,phi_re,phi_im\n";
    for (const Violation& v : rep.violations) {
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g", v.theta, v.k,
                      v.L.real(), v.L.imag(), v.phi_value.real(), v.phi_value.imag());
        os << buf << '\n';
    }
}

} // namespace bkconv

#endif
