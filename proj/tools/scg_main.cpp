#include "scg/field.hpp"
#include "scg/forms.hpp"
#include "scg/groups.hpp"
#include "scg/linalg.hpp"
#include "scg/polytope.hpp"
#include "scg/strings.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Params {
    std::uint64_t q = 0;
    int d = 0;
    std::string type;
    std::string scalars_csv;
    std::string mode = "recursive";
    std::uint64_t cap = 0;  // 0 = command default
    std::string out;
    int threads = 1;
    std::string gens_path;
};

int field_k_from_q(std::uint64_t q) {
    if (q < 2 || q > 65536 || (q & (q - 1)) != 0)
        throw UsageError("--q must be a power of 2 between 2 and 65536");
    int k = 0;
    while ((1ull << k) < q) ++k;
    return k;
}

std::vector<scg::fel> parse_csv_scalars(const scg::Field& f, const std::string& csv) {
    std::vector<scg::fel> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("--scalars entries must be decimal field elements");
        }
        if (pos != item.size() || v == 0 || v >= f.q())
            throw UsageError("--scalars entries must be nonzero field elements below q");
        out.push_back(static_cast<scg::fel>(v));
    }
    if (out.empty()) throw UsageError("--scalars must contain at least one entry");
    return out;
}

const char* kQ2TypeMessage =
    "type '+'/'-'/'sp' constructions require q >= 4; over GF(2) the admissible "
    "scalar set collapses to {1}, and --scalars 1,1,... builds the demonstration string";

std::string kind_name(scg::StringKind k) {
    switch (k) {
        case scg::StringKind::OrthPlus: return "+";
        case scg::StringKind::OrthMinus: return "-";
        case scg::StringKind::SymplecticOddRank: return "sp";
        case scg::StringKind::Sp4Rank4: return "sp4";
    }
    return "?";
}

scg::GeneratorString build_from_params(const scg::Field& f, const Params& p) {
    if (p.type == "sp4") {
        if (p.d != 0 && p.d != 4) throw UsageError("--type sp4 fixes d = 4");
        if (f.q() < 4) throw UsageError(kQ2TypeMessage);
        return scg::build_sp4_rank4(f);
    }
    if (!p.scalars_csv.empty()) {
        std::vector<scg::fel> sc = parse_csv_scalars(f, p.scalars_csv);
        int d = static_cast<int>(sc.size()) + 1;
        if (p.d != 0 && p.d != d) throw UsageError("--d disagrees with the number of --scalars entries");
        try {
            return scg::build_string_generators(scg::build_phi(f, sc));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (p.type.empty()) throw UsageError("need --type (+, -, sp, sp4) or --scalars");
    if (p.type != "+" && p.type != "-" && p.type != "sp")
        throw UsageError("--type must be one of +, -, sp, sp4");
    if (p.d == 0) throw UsageError("need --d");
    if (f.q() < 4) throw UsageError(kQ2TypeMessage);
    std::vector<scg::fel> sc;
    try {
        if (p.type == "sp") {
            if (p.d % 2 != 1) throw UsageError("--type sp needs odd d");
            sc = scg::choose_scalars_symplectic(f, p.d);
        } else {
            if (p.d % 2 != 0) throw UsageError("--type +/- needs even d");
            sc = scg::choose_scalars_for_type(f, p.d, p.type[0]);
        }
        return scg::build_string_generators(scg::build_phi(f, sc));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<scg::Mat> load_generator_file(const scg::Field& f, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open generator file: " + path);
    std::vector<scg::Mat> gens;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        try {
            gens.push_back(scg::parse_matrix(f, line.substr(a, b - a + 1)));
        } catch (const std::exception& e) {
            throw UsageError(std::string("generator file parse failure: ") + e.what());
        }
    }
    if (gens.empty()) throw UsageError("generator file contains no matrices");
    return gens;
}

ordered_json scalars_json(const std::vector<scg::fel>& sc) {
    ordered_json a = ordered_json::array();
    for (scg::fel s : sc) a.push_back(s);
    return a;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

int cmd_scalars(const Params& p) {
    scg::Field f(field_k_from_q(p.q));
    std::vector<scg::fel> a0 = scg::scalar_set_A0(f);
    std::vector<scg::fel> a = scg::scalar_set_A(f);
    ordered_json j;
    j["command"] = "scalars";
    j["parameters"] = {{"q", p.q}};
    j["A0"] = scalars_json(a0);
    j["A"] = scalars_json(a);
    if (p.q == 2) j["note"] = kQ2TypeMessage;
    j["outcome"] = "ok";
    emit(j);
    std::ostringstream s0, s1;
    for (scg::fel v : a0) s0 << (s0.tellp() > 0 ? "," : "") << v;
    for (scg::fel v : a) s1 << (s1.tellp() > 0 ? "," : "") << v;
    std::cerr << "q=" << p.q << "  A0={" << s0.str() << "}  A={" << s1.str() << "}\n";
    return 0;
}

ordered_json parameters_json(const Params& p, const scg::GeneratorString& gs, std::uint64_t cap) {
    ordered_json pj;
    pj["q"] = p.q;
    pj["d"] = gs.space.d;
    pj["type"] = kind_name(gs.kind);
    if (!gs.scalars.empty()) pj["scalars"] = scalars_json(gs.scalars);
    if (gs.kind == scg::StringKind::Sp4Rank4) pj["alpha"] = gs.alpha;
    pj["mode"] = p.mode;
    pj["cap"] = cap;
    pj["threads"] = p.threads;
    return pj;
}

int cmd_construct(const Params& p) {
    scg::Field f(field_k_from_q(p.q));
    scg::GeneratorString gs = build_from_params(f, p);
    ordered_json j;
    j["command"] = "construct";
    j["parameters"] = parameters_json(p, gs, 0);
    j["parameters"].erase("mode");
    j["parameters"].erase("cap");
    ordered_json gens = ordered_json::array();
    for (const scg::Mat& m : gs.gens) gens.push_back(scg::format_matrix(m));
    j["generators"] = gens;
    j["outcome"] = "ok";
    emit(j);
    if (!p.out.empty()) {
        std::ofstream out(p.out);
        if (!out) throw UsageError("cannot write " + p.out);
        out << "# q=" << p.q << " d=" << gs.space.d << " kind=" << kind_name(gs.kind);
        if (!gs.scalars.empty()) {
            out << " scalars=";
            for (std::size_t i = 0; i < gs.scalars.size(); ++i) out << (i ? "," : "") << gs.scalars[i];
        }
        if (gs.kind == scg::StringKind::Sp4Rank4) out << " alpha=" << gs.alpha;
        out << "\n# one matrix per line: rows ';'-separated, entries ','-separated bit patterns\n";
        for (const scg::Mat& m : gs.gens) out << scg::format_matrix(m) << "\n";
        std::cerr << "wrote " << gs.gens.size() << " generators to " << p.out << "\n";
    }
    std::cerr << "constructed " << gs.gens.size() << " generators, kind " << kind_name(gs.kind) << "\n";
    return 0;
}

// involution and isometry preflight; enumeration-backed checks afterwards
int run_verification(const Params& p, const scg::Field& f, const scg::QuadraticSpace* space,
                     scg::StringKind kind, const std::vector<scg::Mat>& gens, ordered_json& j,
                     bool want_polytope) {
    std::uint64_t cap = p.cap ? p.cap : (want_polytope ? scg::kDefaultPolytopeCap : scg::kDefaultEnumerationCap);
    if (p.mode != "full" && p.mode != "recursive") throw UsageError("--mode must be full or recursive");

    bool involutions = true;
    for (const scg::Mat& g : gens) {
        if (scg::is_identity(g) || !scg::is_identity(scg::mat_mul(g, g))) involutions = false;
    }
    ordered_json checks;
    checks["involutions"] = involutions;
    if (space != nullptr) {
        bool isometries = true;
        for (const scg::Mat& g : gens) {
            bool ok = kind == scg::StringKind::Sp4Rank4 ? scg::is_bil_isometry(*space, g)
                                                        : scg::is_phi_isometry(*space, g);
            if (!ok) isometries = false;
        }
        checks["isometries"] = isometries;
    } else {
        checks["isometries"] = nullptr;
    }
    if (!involutions || (checks["isometries"].is_boolean() && !checks["isometries"].get<bool>())) {
        checks["string_condition"] = nullptr;
        checks["intersection_property"] = nullptr;
        j["checks"] = checks;
        j["group_order"] = nullptr;
        j["schlafli"] = nullptr;
        j["outcome"] = "verification_failed";
        return 1;
    }

    try {
        scg::VerificationReport r =
            scg::verify_string_group(f, gens, p.mode == "full", cap, p.threads);
        checks["string_condition"] = r.string_condition;
        checks["intersection_property"] = r.intersection_property;
        j["checks"] = checks;
        j["group_order"] = r.group_order;
        j["schlafli"] = r.schlafli;
        if (!r.string_condition || !r.intersection_property) {
            j["outcome"] = "verification_failed";
            return 1;
        }
    } catch (const scg::CapExceeded&) {
        checks["string_condition"] = nullptr;
        checks["intersection_property"] = nullptr;
        j["checks"] = checks;
        j["group_order"] = nullptr;
        j["schlafli"] = nullptr;
        j["outcome"] = "cap_exceeded";
        return 2;
    }
    j["outcome"] = "ok";
    return 0;
}

int cmd_verify(const Params& p) {
    scg::Field f(field_k_from_q(p.q));
    std::vector<scg::Mat> gens;
    std::unique_ptr<scg::QuadraticSpace> space;
    scg::StringKind kind = scg::StringKind::SymplecticOddRank;
    ordered_json j;
    j["command"] = "verify";

    if (!p.gens_path.empty()) {
        gens = load_generator_file(f, p.gens_path);
        int d = gens.front().rows;
        // the form comes from the flags when they are present
        if (p.type == "sp4") {
            space = std::make_unique<scg::QuadraticSpace>(scg::sp4_space(f));
            kind = scg::StringKind::Sp4Rank4;
        } else if (!p.scalars_csv.empty() || !p.type.empty()) {
            Params q = p;
            if (q.d == 0) q.d = d;
            scg::GeneratorString ref = build_from_params(f, q);
            if (ref.space.d != d) throw UsageError("generator file dimension disagrees with the flags");
            space = std::make_unique<scg::QuadraticSpace>(ref.space);
            kind = ref.kind;
        }
        ordered_json pj;
        pj["q"] = p.q;
        pj["d"] = d;
        pj["gens"] = p.gens_path;
        if (!p.type.empty()) pj["type"] = p.type;
        if (space && !space->scalars.empty()) pj["scalars"] = scalars_json(space->scalars);
        pj["mode"] = p.mode;
        pj["cap"] = p.cap ? p.cap : scg::kDefaultEnumerationCap;
        pj["threads"] = p.threads;
        j["parameters"] = pj;
    } else {
        scg::GeneratorString gs = build_from_params(f, p);
        gens = gs.gens;
        space = std::make_unique<scg::QuadraticSpace>(gs.space);
        kind = gs.kind;
        j["parameters"] = parameters_json(p, gs, p.cap ? p.cap : scg::kDefaultEnumerationCap);
    }

    int rc = run_verification(p, f, space.get(), kind, gens, j, false);
    emit(j);
    std::cerr << "verify: " << j["outcome"].get<std::string>() << "\n";
    return rc;
}

int cmd_polytope(const Params& p) {
    scg::Field f(field_k_from_q(p.q));
    scg::GeneratorString gs = build_from_params(f, p);
    std::uint64_t cap = p.cap ? p.cap : scg::kDefaultPolytopeCap;
    ordered_json j;
    j["command"] = "polytope";
    j["parameters"] = parameters_json(p, gs, cap);

    int rc = run_verification(p, f, &gs.space, gs.kind, gs.gens, j, true);
    if (rc != 0) {
        ordered_json oc = j["outcome"];
        j.erase("outcome");
        j["f_vector"] = nullptr;
        j["flag_count"] = nullptr;
        j["outcome"] = oc;
        emit(j);
        std::cerr << "polytope: " << j["outcome"].get<std::string>() << "\n";
        return rc;
    }
    try {
        scg::PolytopeData pd = scg::build_polytope(f, gs.gens, cap, p.threads);
        j.erase("outcome");  // keep it the last field, as in every other report
        j["f_vector"] = pd.f_vector;
        j["flag_count"] = pd.flag_count;
        j["outcome"] = "ok";
        if (!p.out.empty()) {
            std::ofstream out(p.out);
            if (!out) throw UsageError("cannot write " + p.out);
            out << scg::export_incidence(pd);
            std::cerr << "wrote incidence file " << p.out << "\n";
        }
    } catch (const scg::CapExceeded&) {
        j.erase("outcome");
        j["f_vector"] = nullptr;
        j["flag_count"] = nullptr;
        j["outcome"] = "cap_exceeded";
        emit(j);
        std::cerr << "polytope: cap_exceeded\n";
        return 2;
    }
    emit(j);
    std::cerr << "polytope: ok\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Params p;
    CLI::App app{"characteristic-2 orthogonal and symplectic string groups"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* c, bool with_out) {
        c->add_option("--q", p.q, "field size, a power of 2")->required();
        c->add_option("--d", p.d, "dimension / rank parameter");
        c->add_option("--type", p.type, "+, -, sp, or sp4");
        c->add_option("--scalars", p.scalars_csv, "comma list overriding scalar selection");
        c->add_option("--mode", p.mode, "intersection check: full or recursive");
        c->add_option("--cap", p.cap, "enumeration element cap");
        c->add_option("--threads", p.threads, "worker threads (deterministic for any value)");
        if (with_out) c->add_option("--out", p.out, "output file path");
    };

    CLI::App* s_scalars = app.add_subcommand("scalars", "list the admissible scalar sets");
    s_scalars->add_option("--q", p.q, "field size, a power of 2")->required();

    CLI::App* s_construct = app.add_subcommand("construct", "emit string generators");
    add_common(s_construct, true);

    CLI::App* s_verify = app.add_subcommand("verify", "check the string group properties");
    add_common(s_verify, false);
    s_verify->add_option("--gens", p.gens_path, "generator file (one matrix per line, '#' comments)");

    CLI::App* s_polytope = app.add_subcommand("polytope", "build and export the coset incidence structure");
    add_common(s_polytope, true);

    CLI::App* s_sp4 = app.add_subcommand("sp4", "construct the rank-4 symplectic string");
    s_sp4->add_option("--q", p.q, "field size, a power of 2")->required();
    s_sp4->add_option("--out", p.out, "output file path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }

    Timer timer;
    int rc = 3;
    try {
        if (s_scalars->parsed()) rc = cmd_scalars(p);
        else if (s_construct->parsed()) rc = cmd_construct(p);
        else if (s_verify->parsed()) rc = cmd_verify(p);
        else if (s_polytope->parsed()) rc = cmd_polytope(p);
        else if (s_sp4->parsed()) {
            p.type = "sp4";
            rc = cmd_construct(p);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    } catch (const scg::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "elapsed " << std::fixed << std::setprecision(2) << timer.seconds() << " s\n";
    return rc;
}
