#include "nakamol/cli.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "nakamol/character.hpp"
#include "nakamol/flatness.hpp"
#include "nakamol/koszul.hpp"
#include "nakamol/oracles.hpp"

namespace nakamol {

const char* kLibraryVersion = "nakamol 1.0.0";

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<int> parse_int_list(const std::string& s, int line) {
    std::vector<int> out;
    for (const auto& tok : split_ws(s)) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoi(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw SpecParseError("bad integer '" + tok + "'", line, 1);
        }
    }
    return out;
}

}  // namespace

QuiverSpecFile parse_spec(const std::string& text) {
    QuiverSpecFile spec;
    std::string section;
    std::vector<std::pair<std::string, std::pair<std::string, int>>> arrows_raw;
    std::optional<std::vector<int>> v, w, theta;
    std::optional<std::string> lambda_text;

    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw SpecParseError("unterminated section header", lineno, 1);
            section = line.substr(1, line.size() - 2);
            if (section != "quiver" && section != "dims" && section != "git" &&
                section != "insertion")
                throw SpecParseError("unknown section [" + section + "]", lineno, 1);
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw SpecParseError("expected key = value", lineno, 1);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        const int col = static_cast<int>(raw.find(key)) + 1;
        if (section == "quiver" && key == "vertices") {
            spec.quiver.vertices = split_ws(value);
        } else if (section == "quiver" && key == "arrow") {
            auto pos = value.find("->");
            if (pos == std::string::npos)
                throw SpecParseError("arrow needs the form src -> dst", lineno, col);
            arrows_raw.push_back(
                {trim(value.substr(0, pos)), {trim(value.substr(pos + 2)), lineno}});
        } else if (section == "dims" && key == "v") {
            v = parse_int_list(value, lineno);
        } else if (section == "dims" && key == "w") {
            w = parse_int_list(value, lineno);
        } else if (section == "git" && key == "theta") {
            theta = parse_int_list(value, lineno);
        } else if (section == "insertion" && key == "lambda") {
            if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
                value = value.substr(1, value.size() - 2);
            lambda_text = value;
        } else {
            throw SpecParseError("unknown key '" + key + "' in section [" + section + "]",
                                 lineno, col);
        }
    }

    if (spec.quiver.vertices.empty())
        throw SpecParseError("missing [quiver] vertices", lineno, 1);
    int arrow_id = 0;
    for (const auto& [src, rest] : arrows_raw) {
        const auto& [dst, aline] = rest;
        int si = spec.quiver.vertex_index(src);
        int ti = spec.quiver.vertex_index(dst);
        if (si < 0) throw SpecParseError("arrow references undeclared vertex '" + src + "'",
                                         aline, 1);
        if (ti < 0) throw SpecParseError("arrow references undeclared vertex '" + dst + "'",
                                         aline, 1);
        spec.quiver.arrows.push_back({"e" + std::to_string(++arrow_id), si, ti});
    }
    const int n = spec.quiver.num_vertices();
    if (!v || static_cast<int>(v->size()) != n)
        throw SpecParseError("[dims] v must list one entry per vertex", lineno, 1);
    if (!w || static_cast<int>(w->size()) != n)
        throw SpecParseError("[dims] w must list one entry per vertex", lineno, 1);
    spec.dims.v = *v;
    spec.dims.w = *w;
    spec.quiver.validate();
    spec.dims.validate(spec.quiver);
    if (theta) {
        if (static_cast<int>(theta->size()) != n)
            throw SpecParseError("[git] theta must list one entry per vertex", lineno, 1);
        spec.theta = ThetaVector{*theta};
    }
    if (lambda_text) {
        MultiPartition mp;
        try {
            mp = MultiPartition::parse(*lambda_text);
            mp.validate(spec.dims.v);
        } catch (const std::exception& e) {
            throw SpecParseError(std::string("bad lambda: ") + e.what(), lineno, 1);
        }
        spec.lambda = std::move(mp);
    }
    return spec;
}

std::string serialize_spec(const QuiverSpecFile& spec) {
    std::ostringstream os;
    os << "[quiver]\n";
    os << "vertices =";
    for (const auto& name : spec.quiver.vertices) os << " " << name;
    os << "\n";
    for (const auto& arr : spec.quiver.arrows)
        os << "arrow = " << spec.quiver.vertices[arr.source] << " -> "
           << spec.quiver.vertices[arr.target] << "\n";
    os << "[dims]\n";
    os << "v =";
    for (int x : spec.dims.v) os << " " << x;
    os << "\nw =";
    for (int x : spec.dims.w) os << " " << x;
    os << "\n";
    if (spec.theta) {
        os << "[git]\ntheta =";
        for (int x : spec.theta->theta) os << " " << x;
        os << "\n";
    }
    if (spec.lambda) os << "[insertion]\nlambda = \"" << spec.lambda->str() << "\"\n";
    return os.str();
}

std::uint64_t content_hash(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

nlohmann::json series_to_json(const TruncatedSeries& s) {
    const auto& reg = *s.registry();
    nlohmann::json records = nlohmann::json::array();
    for (const auto& [m, c] : s.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (int i = 0; i < reg.size(); ++i)
            if (m[i] != 0) exps[reg.name(i)] = m[i];
        records.push_back({{"exponents", exps}, {"coeff", to_string(c)}});
    }
    return {{"order", s.order()}, {"terms", records}};
}

namespace {

std::optional<std::filesystem::path> cache_dir() {
    const char* dir = std::getenv("NAKAMOL_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    return std::filesystem::path(dir);
}

std::string options_fingerprint(const RunOptions& o) {
    std::ostringstream os;
    os << o.command << "|order=" << o.order << "|max_degree=" << o.max_degree
       << "|lambda=" << (o.lambda_text ? *o.lambda_text : "-") << "|theta=";
    if (o.theta)
        for (int t : *o.theta) os << t << ",";
    os << "|seed=" << o.seed << "|jcap=" << o.jtype_cap;
    return os.str();
}

std::optional<nlohmann::json> cache_lookup(const std::string& key) {
    auto dir = cache_dir();
    if (!dir) return std::nullopt;
    auto path = *dir / (key + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        auto j = nlohmann::json::parse(buf.str());
        if (!j.contains("command") || !j.contains("results")) throw std::runtime_error("shape");
        return j;
    } catch (const std::exception&) {
        std::cerr << "warning: corrupt cache entry " << path.string()
                  << "; treating as a miss\n";
        return std::nullopt;
    }
}

void cache_store(const std::string& key, const nlohmann::json& body) {
    auto dir = cache_dir();
    if (!dir) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    auto path = *dir / (key + ".json");
    auto tmp = *dir / (key + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << body.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

MultiPartition resolve_lambda(const QuiverSpecFile& spec, const RunOptions& opts) {
    if (opts.lambda_text) {
        auto mp = MultiPartition::parse(*opts.lambda_text);
        mp.validate(spec.dims.v);
        return mp;
    }
    if (spec.lambda) return *spec.lambda;
    throw std::invalid_argument("taut requires a lambda ([insertion] section or --lambda)");
}

ThetaVector resolve_theta(const QuiverSpecFile& spec, const RunOptions& opts) {
    if (opts.theta) {
        if (opts.theta->size() != spec.dims.v.size())
            throw std::invalid_argument("--theta must list one entry per vertex");
        return ThetaVector{*opts.theta};
    }
    if (spec.theta) return *spec.theta;
    throw std::invalid_argument("check-regular requires theta ([git] section or --theta)");
}

nlohmann::json flatness_to_json(const FlatnessReport& rep) {
    nlohmann::json j = {{"flat", rep.flat}};
    if (rep.certificate) {
        nlohmann::json parts = nlohmann::json::array();
        for (const auto& p : rep.certificate->parts) parts.push_back(p);
        j["certificate"] = {{"beta0", rep.certificate->beta0},
                            {"parts", parts},
                            {"lhs", rep.certificate->lhs},
                            {"rhs", rep.certificate->rhs}};
    }
    return j;
}

nlohmann::json scan_to_json(const HomologyScan& scan, const Registry& reg) {
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& piece : scan.pieces) {
        bool any = false;
        for (int h : piece.homology_dims) any = any || h != 0;
        if (!any) continue;
        nlohmann::json md = nlohmann::json::object();
        for (int i = 0; i < reg->size(); ++i)
            if (piece.multidegree[i] != 0) md[reg->name(i)] = piece.multidegree[i];
        pieces.push_back({{"weighted_degree", piece.weighted_degree},
                          {"multidegree", md},
                          {"dims", piece.homology_dims}});
    }
    nlohmann::json totals = nlohmann::json::object();
    for (const auto& [wd, dims] : scan.homology_by_degree)
        totals[std::to_string(wd)] = dims;
    return {{"dmax", scan.dmax}, {"pieces", pieces}, {"totals_by_degree", totals}};
}

nlohmann::json run_results(const QuiverSpecFile& spec, const RunOptions& opts,
                           int& exit_code) {
    const auto& q = spec.quiver;
    const auto& d = spec.dims;
    if (opts.command == "check-flat") {
        return flatness_to_json(is_flat(q, d));
    }
    if (opts.command == "check-regular") {
        auto rep = is_v_regular(q, d.v, resolve_theta(spec, opts));
        nlohmann::json j = {{"regular", rep.regular}};
        if (rep.witness) j["witness"] = *rep.witness;
        return j;
    }
    if (opts.command == "dim") {
        auto [dimM, dimG] = ambient_dims(q, d);
        return {{"smooth_dim", smooth_dim(q, d)},
                {"dim_M", dimM},
                {"dim_g", dimG},
                {"cartan", cartan_matrix(q)}};
    }
    if (opts.command == "series") {
        if (opts.order < 0) throw std::invalid_argument("series requires --order");
        MolienOptions mo;
        mo.jtype_cap = opts.jtype_cap;
        return {{"series", series_to_json(molien_series(q, d, opts.order, mo))}};
    }
    if (opts.command == "taut") {
        if (opts.order < 0) throw std::invalid_argument("taut requires --order");
        auto lambda = resolve_lambda(spec, opts);
        MolienOptions mo;
        mo.jtype_cap = opts.jtype_cap;
        return {{"lambda", lambda.str()},
                {"series", series_to_json(taut_character(q, d, lambda, opts.order, mo))}};
    }
    if (opts.command == "koszul") {
        if (opts.max_degree < 0) throw std::invalid_argument("koszul requires --max-degree");
        auto reg = VarRegistry::for_quiver(d.v, d.w, q.vertices);
        return {{"homology", scan_to_json(homology_scan(q, d, opts.max_degree), reg)}};
    }
    if (opts.command == "crosscheck") {
        const int order = opts.order >= 0 ? opts.order : 4;
        const int dmax = opts.max_degree >= 0 ? opts.max_degree : 4;
        nlohmann::json j;
        auto euler = euler_crosscheck(q, d, dmax);
        j["euler"] = {{"ok", euler.ok}, {"compared", euler.compared}};
        if (!euler.ok) j["euler"]["mismatch"] = euler.mismatch;
        bool all_ok = euler.ok;
        const bool grassmann_shape = q.num_vertices() == 1 && q.arrows.empty() &&
                                     d.v[0] >= 1 && d.w[0] >= d.v[0];
        if (grassmann_shape) {
            const int order_h = order / 2;
            PointDrawer drawer(opts.seed);
            bool ok = true;
            const int points = 3;
            for (int t = 0; t < points; ++t) {
                std::vector<Rational> a;
                while (true) {
                    a = drawer.distinct(d.w[0]);
                    try {
                        GLPartition zero;
                        zero.parts.assign(d.v[0], 0);
                        auto oracle = grassmann_fixed_sum(d.v[0], d.w[0], zero, a, order_h);
                        MolienOptions mo;
                        mo.jtype_cap = opts.jtype_cap;
                        std::map<std::string, Rational> assign;
                        auto reg = VarRegistry::for_quiver(d.v, d.w, q.vertices);
                        for (int k = 0; k < d.w[0]; ++k) assign[reg->name(reg->a(0, k))] = a[k];
                        mo.framing_values = assign;
                        auto mol = molien_series(q, d, 2 * order_h, mo);
                        ok = ok && mol == oracle;
                        break;
                    } catch (const std::domain_error&) {
                        continue;  // pole hit: redraw
                    }
                }
            }
            j["oracle"] = {{"checked", true}, {"points", points}, {"ok", ok}};
            all_ok = all_ok && ok;
        } else {
            j["oracle"] = {{"checked", false}};
        }
        j["ok"] = all_ok;
        if (!all_ok) exit_code = 3;
        return j;
    }
    throw std::invalid_argument("unknown command: " + opts.command);
}

}  // namespace

RunReport run_command(const QuiverSpecFile& spec, const RunOptions& opts) {
    RunReport report;
    const std::string canonical = serialize_spec(spec);
    std::ostringstream keysrc;
    keysrc << kLibraryVersion << "\n" << canonical << "\n" << options_fingerprint(opts);
    char key[32];
    std::snprintf(key, sizeof(key), "%016llx",
                  static_cast<unsigned long long>(content_hash(keysrc.str())));
    if (!opts.no_cache) {
        if (auto hit = cache_lookup(key)) {
            report.body = std::move(*hit);
            report.cache_hit = true;
            report.exit_code = report.body.value("exit_code", 0);
            return report;
        }
    }
    int exit_code = 0;
    nlohmann::json results = run_results(spec, opts, exit_code);
    report.body = {{"command", opts.command},
                   {"input_hash", key},
                   {"options", options_fingerprint(opts)},
                   {"exit_code", exit_code},
                   {"results", results}};
    report.exit_code = exit_code;
    if (!opts.no_cache) cache_store(key, report.body);
    return report;
}

std::string RunReport::render(const std::string& format) const {
    if (format == "json") return body.dump(2) + "\n";
    if (format != "csv") throw std::invalid_argument("unknown format: " + format);
    std::ostringstream os;
    const auto& results = body.at("results");
    if (results.contains("series")) {
        const auto& terms = results.at("series").at("terms");
        // union of variable names, sorted
        std::set<std::string> vars;
        for (const auto& t : terms)
            for (auto it = t.at("exponents").begin(); it != t.at("exponents").end(); ++it)
                vars.insert(it.key());
        os << "coeff";
        for (const auto& v : vars) os << "," << v;
        os << "\n";
        for (const auto& t : terms) {
            os << t.at("coeff").get<std::string>();
            for (const auto& v : vars) {
                const auto& e = t.at("exponents");
                os << "," << (e.contains(v) ? e.at(v).get<int>() : 0);
            }
            os << "\n";
        }
        return os.str();
    }
    for (auto it = results.flatten().begin(); it != results.flatten().end(); ++it)
        os << it.key() << "," << it.value().dump() << "\n";
    return os.str();
}

}  // namespace nakamol
