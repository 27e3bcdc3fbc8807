#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace maxgal::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw FormatError(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
    return *it;
}

template <class T>
T number(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw FormatError(std::string("field '") + key + "' must be an integer");
    return v.get<T>();
}

bool boolean(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_boolean()) throw FormatError(std::string("field '") + key + "' must be a boolean");
    return v.get<bool>();
}

std::string text(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw FormatError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

Json integers_to_json(const std::vector<Integer>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(integer_to_json(x));
    return a;
}

std::vector<Integer> integers_from_json(const Json& j, const char* key) {
    const Json& a = field(j, key);
    if (!a.is_array()) throw FormatError(std::string("field '") + key + "' must be an array");
    std::vector<Integer> out;
    for (const auto& x : a) out.push_back(integer_from_json(x, key));
    return out;
}

std::vector<std::string> strings_from_json(const Json& j, const char* key) {
    const Json& a = field(j, key);
    if (!a.is_array()) throw FormatError(std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& x : a) {
        if (!x.is_string()) throw FormatError(std::string("entries of '") + key + "' must be strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

// Library parse errors surface as format errors.
template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const FormatError&) {
        throw;
    } catch (const Error& e) {
        throw FormatError(e.what());
    }
}

} // namespace

Json integer_to_json(const Integer& n) { return to_string(n); }

Integer integer_from_json(const Json& j, const std::string& what) {
    if (!j.is_string()) throw FormatError(what + ": big integers are stored as decimal strings");
    try {
        return parse_integer(j.get<std::string>());
    } catch (const Error&) {
        throw FormatError(what + ": not a decimal integer: " + j.get<std::string>());
    }
}

Json poly_to_json(const ZPoly& f) {
    Json j;
    j["degree"] = f.degree();
    j["coeffs"] = integers_to_json(f.coeffs());
    return j;
}

ZPoly poly_from_json(const Json& j) {
    const int degree = number<int>(j, "degree");
    auto coeffs = integers_from_json(j, "coeffs");
    if (degree < 1) throw FormatError("polynomial degree must be positive");
    if (static_cast<int>(coeffs.size()) != degree + 1) {
        throw FormatError("expected " + std::to_string(degree + 1) + " coefficients, found " +
                          std::to_string(coeffs.size()));
    }
    if (coeffs.back() != 1) throw FormatError("polynomial must be monic");
    return ZPoly(std::move(coeffs));
}

Json tuple_to_json(const GoldbachTuple& t) {
    return Json{{"q1", t.q1}, {"q2", t.q2}, {"q3", t.q3}, {"q4", t.q4}, {"q5", t.q5}};
}

GoldbachTuple tuple_from_json(const Json& j) {
    GoldbachTuple t;
    t.q1 = number<std::uint64_t>(j, "q1");
    t.q2 = number<std::uint64_t>(j, "q2");
    t.q3 = number<std::uint64_t>(j, "q3");
    t.q4 = number<std::uint64_t>(j, "q4");
    t.q5 = number<std::uint64_t>(j, "q5");
    return t;
}

Json plan_to_json(const PrimePlan& p) {
    Json j;
    j["p_t"] = integer_to_json(p.p_t);
    j["p_t'"] = integer_to_json(p.p_t2);
    j["p2"] = integer_to_json(p.p2);
    j["p2'"] = integer_to_json(p.p2p);
    j["p3"] = integer_to_json(p.p3);
    j["p3'"] = integer_to_json(p.p3p);
    j["p_irr"] = integer_to_json(p.p_irr);
    j["p_lin"] = integer_to_json(p.p_lin);
    return j;
}

PrimePlan plan_from_json(const Json& j, int g, const GoldbachTuple& tuple) {
    PrimePlan p;
    p.g = g;
    p.tuple = tuple;
    p.tuple.g = g;
    p.p_t = integer_from_json(field(j, "p_t"), "p_t");
    p.p_t2 = integer_from_json(field(j, "p_t'"), "p_t'");
    p.p2 = integer_from_json(field(j, "p2"), "p2");
    p.p2p = integer_from_json(field(j, "p2'"), "p2'");
    p.p3 = integer_from_json(field(j, "p3"), "p3");
    p.p3p = integer_from_json(field(j, "p3'"), "p3'");
    p.p_irr = integer_from_json(field(j, "p_irr"), "p_irr");
    p.p_lin = integer_from_json(field(j, "p_lin"), "p_lin");
    return p;
}

Json spec_to_json(const SpecWitness& sw) {
    const LocalSpec& s = sw.spec;
    Json j;
    j["kind"] = to_string(s.kind);
    j["prime"] = integer_to_json(s.p);
    j["exponent"] = s.m;
    j["modulus"] = integer_to_json(s.modulus());
    if (s.kind == LocalKind::Type) {
        j["t"] = s.t;
        j["qs"] = integers_to_json(s.qs);
    }
    if (s.kind == LocalKind::DoubleRoots) j["count"] = s.count;
    j["witness"] = integers_to_json(sw.witness.coeffs());
    return j;
}

SpecWitness spec_from_json(const Json& j) {
    return guarded([&] {
        LocalSpec s;
        s.kind = parse_local_kind(text(j, "kind"));
        s.p = integer_from_json(field(j, "prime"), "prime");
        s.m = number<int>(j, "exponent");
        if (s.m < 1) throw FormatError("exponent must be positive");
        if (s.kind == LocalKind::Type) {
            s.t = number<int>(j, "t");
            s.qs = integers_from_json(j, "qs");
        }
        if (s.kind == LocalKind::DoubleRoots) s.count = number<int>(j, "count");
        const Integer modulus = integer_from_json(field(j, "modulus"), "modulus");
        if (modulus != s.modulus()) throw FormatError("modulus does not equal prime^exponent");
        ResiduePoly w(modulus, integers_from_json(j, "witness"));
        if (w.coeffs() != integers_from_json(j, "witness")) throw FormatError("witness coefficients not reduced");
        return SpecWitness{s, w};
    });
}

Json repair_to_json(const RepairRecord& r) {
    Json j;
    j["n_tilde"] = integer_to_json(r.n_tilde);
    j["small_prime_fixes"] = integers_to_json(r.small_prime_fixes);
    j["linear_nudge"] = integer_to_json(r.linear_nudge);
    j["z"] = integer_to_json(r.z);
    j["f"] = poly_to_json(r.f);
    j["checked_primes"] = integers_to_json(r.checked_primes);
    j["repaired_primes"] = integers_to_json(r.repaired_primes);
    j["scan_bound"] = r.scan_bound;
    j["rho_budget"] = r.rho_budget;
    j["residual_cofactor"] = integer_to_json(r.residual_cofactor);
    j["status"] = to_string(r.status);
    return j;
}

RepairRecord repair_from_json(const Json& j) {
    RepairRecord r;
    r.n_tilde = integer_from_json(field(j, "n_tilde"), "n_tilde");
    r.small_prime_fixes = integers_from_json(j, "small_prime_fixes");
    r.linear_nudge = integer_from_json(field(j, "linear_nudge"), "linear_nudge");
    r.z = integer_from_json(field(j, "z"), "z");
    r.f = poly_from_json(field(j, "f"));
    r.checked_primes = integers_from_json(j, "checked_primes");
    r.repaired_primes = integers_from_json(j, "repaired_primes");
    r.scan_bound = number<std::uint64_t>(j, "scan_bound");
    r.rho_budget = number<std::uint64_t>(j, "rho_budget");
    r.residual_cofactor = integer_from_json(field(j, "residual_cofactor"), "residual_cofactor");
    const std::string status = text(j, "status");
    if (status == to_string(RepairStatus::Unconditional)) {
        r.status = RepairStatus::Unconditional;
    } else if (status == to_string(RepairStatus::Conditional)) {
        r.status = RepairStatus::Conditional;
    } else {
        throw FormatError("unknown repair status " + status);
    }
    return r;
}

Json report_to_json(const VerificationReport& r) {
    Json j;
    j["genus"] = r.g;
    Json flags = Json::array();
    for (const auto& f : r.flags) {
        flags.push_back({{"hypothesis", to_string(f.hypothesis)}, {"status", to_string(f.status)}, {"evidence", f.evidence}});
    }
    j["flags"] = flags;
    j["scan"] = {{"bound", r.scan.bound},
                 {"rho_budget", r.scan.rho_budget},
                 {"bad_primes", integers_to_json(r.scan.bad_primes)},
                 {"resultant_primes", integers_to_json(r.scan.resultant_primes)},
                 {"residual_cofactor", integer_to_json(r.scan.residual_cofactor)},
                 {"resultant_zero", r.scan.resultant_zero}};
    j["adm"] = {{"derived", r.adm}, {"notes", r.adm_notes}};
    j["mod2"] = {{"cycle_2g+2", r.cycle_full}, {"cycle_2g+1", r.cycle_minus_one}, {"transposition", r.transposition}};
    j["not_totally_toric"] = integers_to_json(r.not_totally_toric);
    j["not_semistable"] = integers_to_json(r.not_semistable);
    return j;
}

VerificationReport report_from_json(const Json& j, const PrimePlan& plan) {
    return guarded([&] {
        VerificationReport r;
        r.g = number<int>(j, "genus");
        r.plan = plan;
        const Json& flags = field(j, "flags");
        if (!flags.is_array()) throw FormatError("field 'flags' must be an array");
        for (const auto& f : flags) {
            r.flags.push_back({parse_hypothesis(text(f, "hypothesis")), parse_flag_status(text(f, "status")),
                               text(f, "evidence")});
        }
        const Json& scan = field(j, "scan");
        r.scan.bound = number<std::uint64_t>(scan, "bound");
        r.scan.rho_budget = number<std::uint64_t>(scan, "rho_budget");
        r.scan.bad_primes = integers_from_json(scan, "bad_primes");
        r.scan.resultant_primes = integers_from_json(scan, "resultant_primes");
        r.scan.residual_cofactor = integer_from_json(field(scan, "residual_cofactor"), "residual_cofactor");
        r.scan.resultant_zero = boolean(scan, "resultant_zero");
        const Json& adm = field(j, "adm");
        r.adm = boolean(adm, "derived");
        r.adm_notes = strings_from_json(adm, "notes");
        const Json& mod2 = field(j, "mod2");
        r.cycle_full = boolean(mod2, "cycle_2g+2");
        r.cycle_minus_one = boolean(mod2, "cycle_2g+1");
        r.transposition = boolean(mod2, "transposition");
        r.not_totally_toric = integers_from_json(j, "not_totally_toric");
        r.not_semistable = integers_from_json(j, "not_semistable");
        return r;
    });
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["kind"] = to_string(v.kind);
    j["theorem"] = v.theorem;
    j["excluded"] = integers_to_json(std::vector<Integer>(v.excluded.begin(), v.excluded.end()));
    j["conditional"] = v.conditional;
    j["symmetric_mod_2"] = v.symmetric_mod_2;
    j["text"] = v.text;
    return j;
}

Verdict verdict_from_json(const Json& j) {
    return guarded([&] {
        Verdict v;
        v.kind = parse_verdict_kind(text(j, "kind"));
        v.theorem = text(j, "theorem");
        for (const auto& p : integers_from_json(j, "excluded")) v.excluded.insert(p);
        v.conditional = boolean(j, "conditional");
        v.symmetric_mod_2 = boolean(j, "symmetric_mod_2");
        v.text = text(j, "text");
        return v;
    });
}

Json certificate_to_json(const CertificateFile& file) {
    const Certificate& c = file.cert;
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["genus"] = c.g;
    j["fixture"] = c.fixture;
    j["seed"] = c.seed;
    j["tuple"] = tuple_to_json(c.plan.tuple);
    j["plan"] = plan_to_json(c.plan);
    Json specs = Json::array();
    for (const auto& sw : c.specs) specs.push_back(spec_to_json(sw));
    j["specs"] = specs;
    j["f0"] = poly_to_json(c.f0);
    j["N"] = integer_to_json(c.N);
    j["repair"] = repair_to_json(c.repair);
    if (file.report) j["report"] = report_to_json(*file.report);
    if (file.verdict) j["verdict"] = verdict_to_json(*file.verdict);
    return j;
}

CertificateFile certificate_from_json(const Json& j) {
    const int version = number<int>(j, "schema_version");
    if (version != kSchemaVersion) {
        throw FormatError("unsupported schema_version " + std::to_string(version) + " (expected " +
                          std::to_string(kSchemaVersion) + ")");
    }
    CertificateFile file;
    Certificate& c = file.cert;
    c.g = number<int>(j, "genus");
    if (c.g < 1) throw FormatError("genus must be positive");
    c.fixture = boolean(j, "fixture");
    c.seed = number<std::uint64_t>(j, "seed");
    c.plan = plan_from_json(field(j, "plan"), c.g, tuple_from_json(field(j, "tuple")));
    const Json& specs = field(j, "specs");
    if (!specs.is_array()) throw FormatError("field 'specs' must be an array");
    for (const auto& s : specs) c.specs.push_back(spec_from_json(s));
    c.f0 = poly_from_json(field(j, "f0"));
    c.N = integer_from_json(field(j, "N"), "N");
    c.repair = repair_from_json(field(j, "repair"));
    if (j.contains("report")) file.report = report_from_json(j["report"], c.plan);
    if (j.contains("verdict")) file.verdict = verdict_from_json(j["verdict"]);
    return file;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw FormatError("write failed for " + path.string());
}

} // namespace maxgal::io
