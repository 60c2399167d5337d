#pragma once

#include <string>

#include "lhom/dcomplex.hpp"

namespace lhom {

/// A document whose grid laws fail. Carries the full report.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport report)
        : std::runtime_error("document violates the grid laws (" +
                             std::to_string(report.violations.size()) + " violation(s))"),
          report_(std::move(report)) {}

    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Canonical JSON text: sorted keys, canonical scalar strings, maps with a
/// zero-dimensional endpoint omitted, LF newline at the end. save/load are
/// mutually inverse on canonical documents.
std::string save(const DoubleComplex& dc);
void save_file(const DoubleComplex& dc, const std::string& path);

/// Throws ParseError on syntax/schema problems and, when check_laws is
/// set, ValidationError on grid-law violations.
DoubleComplex load(const std::string& text, bool check_laws = true);
DoubleComplex load_file(const std::string& path, bool check_laws = true);

}  // namespace lhom
