#pragma once

#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "maxgal/construct.hpp"
#include "maxgal/error.hpp"
#include "maxgal/verify.hpp"

namespace maxgal::io {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent file contents.
class FormatError : public Error {
public:
    using Error::Error;
};

inline constexpr int kSchemaVersion = 1;

// Big integers travel as decimal strings.
Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j, const std::string& what);

/// {"degree": n, "coeffs": [...]} with ascending coefficients, monic.
Json poly_to_json(const ZPoly& f);
ZPoly poly_from_json(const Json& j);

Json tuple_to_json(const GoldbachTuple& t);
GoldbachTuple tuple_from_json(const Json& j);

/// The auxiliary primes only; genus and tuple live at the top of a certificate.
Json plan_to_json(const PrimePlan& plan);
PrimePlan plan_from_json(const Json& j, int g, const GoldbachTuple& tuple);

Json spec_to_json(const SpecWitness& sw);
SpecWitness spec_from_json(const Json& j);

Json repair_to_json(const RepairRecord& r);
RepairRecord repair_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j, const PrimePlan& plan);

Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

struct CertificateFile {
    Certificate cert;
    std::optional<VerificationReport> report;
    std::optional<Verdict> verdict;

    friend bool operator==(const CertificateFile&, const CertificateFile&) = default;
};

Json certificate_to_json(const CertificateFile& file);
CertificateFile certificate_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);

} // namespace maxgal::io
