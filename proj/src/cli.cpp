#include "hess/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "hess/cells.hpp"
#include "hess/errors.hpp"
#include "hess/ideal.hpp"
#include "hess/poincare.hpp"
#include "hess/root_system.hpp"
#include "hess/serialize.hpp"

namespace hess::cli {

namespace {

struct Request {
    std::string command;
    std::string type;
    int rank = 0;
    std::optional<std::string> theta, K, h, ideal;
    std::string methods = "all";
    std::string format = "json";
    bool count = false;
    bool show_roots = false;
    Limits limits;
};

std::vector<int> parse_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgs, std::string("malformed integer '") + item + "' in " + what);
        }
    }
    return out;
}

std::size_t env_cap(const char* name, std::size_t fallback) {
    if (const char* v = std::getenv(name)) {
        try {
            return static_cast<std::size_t>(std::stoull(v));
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgs, std::string("malformed ") + name + " value '" + v + "'");
        }
    }
    return fallback;
}

RootSystem root_system_of(const Request& req) {
    if (req.type.size() != 1) throw Error(ErrorKind::UnsupportedType, "type must be one letter A-G, got '" + req.type + "'");
    return RootSystem::build(static_cast<char>(std::toupper(static_cast<unsigned char>(req.type[0]))), req.rank);
}

std::optional<PartialHessenbergFunction> hessenberg_of(const RootSystem& rs, const Request& req) {
    if (!req.K && !req.h) return std::nullopt;
    if (!req.K || !req.h) throw Error(ErrorKind::InvalidArgs, "--K and --h must be given together");
    if (rs.family() != 'A') throw Error(ErrorKind::InvalidArgs, "Hessenberg data (--K, --h) needs type A");
    PartialHessenbergFunction f{rs.rank() + 1, parse_list(*req.K, "--K"), parse_list(*req.h, "--h")};
    f.validate();
    return f;
}

ThetaSet theta_of(const RootSystem& rs, const Request& req) {
    if (req.theta && req.K) throw Error(ErrorKind::InvalidArgs, "give Theta either as --theta or through --K, not both");
    if (req.K) {
        if (rs.family() != 'A') throw Error(ErrorKind::InvalidArgs, "--K needs type A");
        PartialHessenbergFunction f{rs.rank() + 1, parse_list(*req.K, "--K"), {}};
        return f.theta();
    }
    if (req.theta) return theta_from_one_based(rs, parse_list(*req.theta, "--theta"));
    return {};
}

struct IdealInput {
    RootSet ideal;
    ThetaSet theta;
    std::optional<PartialHessenbergFunction> hessenberg;
    std::vector<int> extended;
};

IdealInput ideal_of(const RootSystem& rs, const Request& req) {
    auto f = hessenberg_of(rs, req);
    if (f && req.ideal) throw Error(ErrorKind::InvalidArgs, "give the ideal either as --ideal or as --K/--h, not both");
    if (!f && !req.ideal) throw Error(ErrorKind::InvalidArgs, "an ideal is required: --ideal or --K with --h");
    IdealInput in;
    if (f) {
        if (req.theta) throw Error(ErrorKind::InvalidArgs, "Theta is inferred from --K; drop --theta");
        HessenbergIdeal hi = ideal_from_partial_hessenberg(rs, *f);
        in.ideal = hi.ideal;
        in.theta = hi.theta;
        in.extended = hi.extended;
        in.hessenberg = f;
    } else {
        in.ideal = ideal_from_indices(rs, parse_list(*req.ideal, "--ideal"));
        in.theta = theta_of(rs, req);
    }
    return in;
}

Json header(const RootSystem& rs) { return Json{{"type", std::string(1, rs.family())}, {"rank", rs.rank()}}; }

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string join_coeffs(const QPolynomial& p) {
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? "," : "") + p.coeffs()[i].str();
    return s;
}

int cmd_roots(const Request& req, std::ostream& out) {
    const RootSystem rs = root_system_of(req);
    if (req.format == "json") {
        Json j = header(rs);
        j["count"] = rs.num_positive();
        Json roots = Json::array();
        for (int k = 0; k < rs.num_positive(); ++k) roots.push_back(root_to_json(rs, k));
        j["roots"] = roots;
        emit_json(out, j);
    } else if (req.format == "csv") {
        out << "index,height";
        for (int i = 1; i <= rs.rank(); ++i) out << ",c" << i;
        out << "\n";
        for (int k = 0; k < rs.num_positive(); ++k) out << k << "," << rs.height(k) << "," << join(rs.root(k).coeffs) << "\n";
    } else {
        for (int k = 0; k < rs.num_positive(); ++k)
            out << k << "\theight " << rs.height(k) << "\t(" << join(rs.root(k).coeffs, " ") << ")\n";
    }
    return kOk;
}

int cmd_ideals(const Request& req, std::ostream& out) {
    const RootSystem rs = root_system_of(req);
    const ThetaSet theta = theta_of(rs, req);
    const auto ideals = enumerate_theta_ideals(rs, theta, req.limits.ideal_cap);
    if (req.format == "json") {
        Json j = header(rs);
        j["theta"] = theta_to_json(theta);
        j["count"] = ideals.size();
        if (!req.count) {
            Json list = Json::array();
            for (const auto& s : ideals) list.push_back(ideal_to_json(s));
            j["ideals"] = list;
        }
        emit_json(out, j);
    } else if (req.count) {
        out << ideals.size() << "\n";
    } else {
        for (const auto& s : ideals) out << join(s.indices()) << "\n";
    }
    return kOk;
}

std::vector<Method> methods_of(const Request& req, bool have_hessenberg) {
    std::vector<Method> out;
    std::stringstream ss(req.methods);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name == "all") {
            for (Method m : kAllMethods)
                if (m != Method::QBinomial || have_hessenberg) out.push_back(m);
            continue;
        }
        auto m = parse_method(name);
        if (!m) throw Error(ErrorKind::InvalidArgs, "unknown method '" + name + "'");
        if (*m == Method::QBinomial && !have_hessenberg)
            throw Error(ErrorKind::InvalidArgs, "the qbinomial method needs type A Hessenberg input (--K, --h)");
        if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
    }
    if (out.empty()) throw Error(ErrorKind::InvalidArgs, "no method selected");
    return out;
}

int cmd_poincare(const Request& req, std::ostream& out) {
    const RootSystem rs = root_system_of(req);
    const IdealInput in = ideal_of(rs, req);
    require_theta_ideal(rs, in.ideal, in.theta);
    const std::vector<Method> methods = methods_of(req, in.hessenberg.has_value());

    CellEnumerator cells(rs, req.limits);
    std::vector<std::pair<Method, FactoredPolynomial>> results;
    std::optional<std::size_t> cell_count;
    for (Method m : methods) {
        FactoredPolynomial r;
        switch (m) {
            case Method::Cells: {
                auto adm = cells.admissible(in.ideal, in.theta);
                cell_count = adm.size();
                std::vector<BigInt> c;
                for (const auto& y : adm) {
                    if (c.size() <= y.count()) c.resize(y.count() + 1, 0);
                    c[y.count()] += 1;
                }
                r.value = QPolynomial(std::move(c));
                break;
            }
            case Method::WeylType: r.value = poincare_weyltype(cells, in.ideal, in.theta, req.limits); break;
            case Method::Product: r = poincare_product_factored(rs, in.ideal, in.theta); break;
            case Method::HeightDist: r = poincare_height_dist_factored(rs, in.ideal, in.theta); break;
            case Method::QBinomial: r.value = poincare_qbinomial(*in.hessenberg); break;
        }
        results.emplace_back(m, std::move(r));
    }
    const int dim = dimension(rs, in.ideal, in.theta);
    const bool agree = std::all_of(results.begin(), results.end(),
                                   [&](const auto& r) { return r.second.value == results.front().second.value; });

    if (req.format == "json") {
        Json j = header(rs);
        j["theta"] = theta_to_json(in.theta);
        j["ideal"] = ideal_to_json(in.ideal);
        if (in.hessenberg) {
            Json hj = hessenberg_to_json(*in.hessenberg);
            hj["extended"] = in.extended;
            j["hessenberg"] = hj;
        }
        if (req.show_roots) {
            Json roots = Json::array();
            in.ideal.for_each([&](int k) { roots.push_back(root_to_json(rs, k)); });
            j["roots"] = roots;
        }
        Json mj = Json::object();
        for (const auto& [m, r] : results) {
            Json entry{{"coeffs", polynomial_to_json(r.value)}};
            if (m == Method::Cells && cell_count) entry["cells"] = *cell_count;
            if (m == Method::Product || m == Method::HeightDist) entry["factored"] = factored_to_json(r.factors);
            mj[method_name(m)] = entry;
        }
        j["methods"] = mj;
        j["dimension"] = dim;
        j["agree"] = agree;
        emit_json(out, j);
    } else if (req.format == "csv") {
        for (const auto& [m, r] : results) out << method_name(m) << "," << join_coeffs(r.value) << "\n";
    } else {
        for (const auto& [m, r] : results) out << method_name(m) << ": " << r.value << "\n";
        out << "dimension: " << dim << "\nagree: " << (agree ? "true" : "false") << "\n";
    }
    return agree ? kOk : kIdentityFailure;
}

int cmd_verify(const Request& req, std::ostream& out, std::ostream& err) {
    const RootSystem rs = root_system_of(req);
    std::optional<ThetaSet> theta;
    if (req.theta || req.K) theta = theta_of(rs, req);
    const auto start = std::chrono::steady_clock::now();
    const SweepSummary summary = verify_sweep(rs, theta, req.limits);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (req.format == "json") {
        Json j = header(rs);
        j["theta"] = theta ? theta_to_json(*theta) : Json("all");
        j["thetas_checked"] = summary.thetas_checked;
        j["ideals_checked"] = summary.ideals_checked;
        j["failures"] = summary.failures.size();
        Json failed = Json::array();
        for (const auto& f : summary.failures)
            failed.push_back(Json{{"theta", theta_to_json(f.theta)}, {"ideal", ideal_to_json(f.ideal)}, {"checks", f.failed_checks}});
        j["failed"] = failed;
        emit_json(out, j);
    } else if (req.format == "csv") {
        out << "thetas_checked,ideals_checked,failures\n"
            << summary.thetas_checked << "," << summary.ideals_checked << "," << summary.failures.size() << "\n";
    } else {
        out << "thetas checked: " << summary.thetas_checked << "\nideals checked: " << summary.ideals_checked
            << "\nfailures: " << summary.failures.size() << "\n";
    }
    // Timing stays off stdout so identical requests give identical output.
    err << "wall time: " << seconds << " s\n";
    return summary.failures.empty() ? kOk : kIdentityFailure;
}

int cmd_exponents(const Request& req, std::ostream& out) {
    const RootSystem rs = root_system_of(req);
    const IdealInput in = ideal_of(rs, req);
    const std::vector<int> exps = arrangement_exponents(rs, in.ideal);
    const HeightDistribution d = height_distribution(rs, in.ideal);
    if (req.format == "json") {
        Json j = header(rs);
        j["ideal"] = ideal_to_json(in.ideal);
        j["height_distribution"] = d.lambda;
        j["exponents"] = exps;
        emit_json(out, j);
    } else {
        out << join(exps) << "\n";
    }
    return kOk;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::CapExceeded: return kCapExceeded;
        case ErrorKind::NonExactDivision: return kIdentityFailure;
        default: return kInvalidInput;
    }
}

void report_error(std::ostream& out, std::ostream& err, const std::string& format, const std::string& kind,
                  const std::string& message, int code) {
    std::string guidance;
    if (kind == "CapExceeded") guidance = "raise the limit with --cap / --perm-cap / --ideal-cap or the HESS_CAP environment variable";
    if (format == "json") {
        Json e{{"kind", kind}, {"message", message}, {"exit_code", code}};
        if (!guidance.empty()) e["guidance"] = guidance;
        emit_json(out, Json{{"error", e}});
    }
    err << "error: " << kind << ": " << message << "\n";
    if (!guidance.empty()) err << "hint: " << guidance << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Poincare polynomials of regular nilpotent partial Hessenberg varieties"};
    app.require_subcommand(1);
    Request req;
    std::string format = "json";

    try {
        req.limits.matrix_cap = env_cap("HESS_CAP", req.limits.matrix_cap);
        req.limits.permutation_cap = env_cap("HESS_PERM_CAP", req.limits.permutation_cap);
    } catch (const Error& e) {
        report_error(out, err, format, error_kind_name(e.kind()), e.what(), kInvalidInput);
        return kInvalidInput;
    }

    std::string theta, K, h, ideal;
    auto add_common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print this help message");
        sub->add_option("--type", req.type, "root system family A-G")->required();
        sub->add_option("--rank", req.rank, "rank")->required();
        sub->add_option("--format", req.format, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));
        sub->add_option("--cap", req.limits.matrix_cap, "Weyl group element cap (matrix path)");
        sub->add_option("--perm-cap", req.limits.permutation_cap, "element cap for the type A permutation path");
        sub->add_option("--ideal-cap", req.limits.ideal_cap, "search-node cap for ideal enumeration");
    };
    auto add_theta = [&](CLI::App* sub) {
        sub->add_option("--theta", theta, "Theta as 1-based simple indices, e.g. 1,3");
        sub->add_option("--K", K, "type A: K as a comma list; Theta = [n-1] \\ K");
    };
    auto add_ideal = [&](CLI::App* sub) {
        sub->add_option("--ideal", ideal, "ideal as 0-based canonical root indices");
        sub->add_option("--h", h, "type A: h(k_1),...,h(k_s),h(n)");
    };

    CLI::App* roots = app.add_subcommand("roots", "list positive roots in canonical order");
    add_common(roots);
    CLI::App* ideals = app.add_subcommand("ideals", "enumerate Theta-ideals");
    add_common(ideals);
    add_theta(ideals);
    ideals->add_flag("--count", req.count, "print only the number of ideals");
    CLI::App* poincare = app.add_subcommand("poincare", "Poincare polynomial of one Theta-ideal");
    add_common(poincare);
    add_theta(poincare);
    add_ideal(poincare);
    poincare->add_option("--method", req.methods, "cells, weyltype, product, height-dist, qbinomial or all");
    poincare->add_flag("--show-roots", req.show_roots, "include coefficient vectors of the ideal's roots");
    CLI::App* verify = app.add_subcommand("verify", "check every identity over all Theta-ideals");
    add_common(verify);
    add_theta(verify);
    CLI::App* exponents = app.add_subcommand("exponents", "ideal arrangement exponents of a lower ideal");
    add_common(exponents);
    add_theta(exponents);
    add_ideal(exponents);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        report_error(out, err, req.format, "UsageError", e.what(), kInvalidInput);
        return kInvalidInput;
    }

    CLI::App* sub = app.get_subcommands().front();
    req.command = sub->get_name();
    auto grab = [&](const char* flag, const std::string& v, std::optional<std::string>& dst) {
        if (auto* opt = sub->get_option_no_throw(flag); opt && opt->count() > 0) dst = v;
    };
    grab("--theta", theta, req.theta);
    grab("--K", K, req.K);
    grab("--h", h, req.h);
    grab("--ideal", ideal, req.ideal);

    try {
        if (req.command == "roots") return cmd_roots(req, out);
        if (req.command == "ideals") return cmd_ideals(req, out);
        if (req.command == "poincare") return cmd_poincare(req, out);
        if (req.command == "verify") return cmd_verify(req, out, err);
        return cmd_exponents(req, out);
    } catch (const Error& e) {
        const int code = exit_code_for(e.kind());
        report_error(out, err, req.format, error_kind_name(e.kind()), e.what(), code);
        return code;
    }
}

}  // namespace hess::cli
