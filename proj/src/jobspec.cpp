#include "bigcenter/jobspec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bigcenter {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

struct Cursor {
    int line = 0;
    std::optional<SpecError> err;

    void fail(const std::string& msg) {
        if (!err) err = SpecError{line, msg};
    }
};

Mat2<Rational> parse_matrix(const std::vector<std::string>& toks, size_t from, Cursor& cur) {
    if (toks.size() != from + 4) {
        cur.fail("expected four rational entries a b c d");
        return mat2(0, 0, 0, 0);
    }
    try {
        return mat2(rat_from_string(toks[from]), rat_from_string(toks[from + 1]),
                    rat_from_string(toks[from + 2]), rat_from_string(toks[from + 3]));
    } catch (const std::exception& ex) {
        cur.fail(ex.what());
        return mat2(0, 0, 0, 0);
    }
}

void parse_range(const std::string& value, int& lo, int& hi, Cursor& cur) {
    auto dots = value.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(value);
        } else {
            lo = std::stoi(value.substr(0, dots));
            hi = std::stoi(value.substr(dots + 2));
        }
    } catch (const std::exception&) {
        cur.fail("bad mode range: " + value);
    }
    if (lo > hi) cur.fail("empty mode range: " + value);
}

// ope <gen> <gen> <l> = coefficients over (vacuum, generators...)
void parse_ope_line(VASpec& spec, const std::string& key, const std::string& value, Cursor& cur) {
    auto toks = split_ws(key);
    if (toks.size() != 4) {
        cur.fail("ope lines read: ope <gen> <gen> <l> = c0 c1 ...");
        return;
    }
    int i, j, l;
    try {
        i = spec.gen_index(toks[1]);
        j = spec.gen_index(toks[2]);
        l = std::stoi(toks[3]);
    } catch (const std::exception& ex) {
        cur.fail(ex.what());
        return;
    }
    if (l >= 0) {
        cur.fail("ope entries are singular: l < 0");
        return;
    }
    auto vals = split_ws(value);
    if (static_cast<int>(vals.size()) != spec.num_states()) {
        cur.fail("expected " + std::to_string(spec.num_states()) + " coefficients");
        return;
    }
    std::vector<Rational> entry;
    try {
        for (const auto& v : vals) entry.push_back(rat_from_string(v));
    } catch (const std::exception& ex) {
        cur.fail(ex.what());
        return;
    }
    spec.pole_bound = std::min(spec.pole_bound, l);
    spec.ope[{i, l, j}] = entry;
}

} // namespace

VASpec JobSpec::algebra() const {
    if (inline_algebra) return *inline_algebra;
    if (algebra_name == "symplectic-fermions") return builtin_symplectic_fermions();
    throw std::invalid_argument("unknown algebra: " + algebra_name);
}

Connection JobSpec::make_conn(int order) const {
    Connection A = make_connection(connection, order);
    if (singular == "semisimple-lam") {
        Poly lam = Poly::param(Sym::lam);
        A.singular_a0 = Mat2<Poly>{lam, Poly(), Poly(), -lam};
    } else if (singular == "nilpotent") {
        A.singular_a0 = Mat2<Poly>{Poly(), Poly::one(), Poly(), Poly()};
    } else if (singular != "none") {
        throw std::invalid_argument("unknown singular part: " + singular);
    }
    return A;
}

std::variant<JobSpec, SpecError> parse_jobspec(const std::string& text) {
    JobSpec job;
    Cursor cur;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    VASpec inline_spec;
    bool has_inline = false;
    bool inline_gens_seen = false;

    while (std::getline(in, raw)) {
        ++cur.line;
        std::string line = trim(raw);
        if (auto hash = line.find('#'); hash != std::string::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                cur.fail("unterminated section header");
                break;
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section != "connection" && section != "algebra" && section != "gauge")
                cur.fail("unknown section: " + section);
            if (section == "algebra") has_inline = true;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            cur.fail("expected key = value");
            break;
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (cur.err) break;

        if (section.empty()) {
            try {
                if (key == "command") job.command = value;
                else if (key == "group") job.group = value;
                else if (key == "truncation") job.truncation = std::stoi(value);
                else if (key == "seed") job.seed = std::stoull(value);
                else if (key == "mode") job.mode = std::stoi(value);
                else if (key == "algebra") job.algebra_name = value;
                else if (key == "criterion") job.criterion = std::stoi(value);
                else if (key == "output") {
                    if (value == "text") job.output = OutputMode::text;
                    else if (value == "structured") job.output = OutputMode::structured;
                    else cur.fail("output is text or structured");
                } else if (key == "modes") {
                    auto parts = split_ws(value);
                    if (parts.size() != 2) cur.fail("modes reads: <m-range> <n-range>");
                    else {
                        parse_range(parts[0], job.m_lo, job.m_hi, cur);
                        parse_range(parts[1], job.n_lo, job.n_hi, cur);
                    }
                } else cur.fail("unknown key: " + key);
            } catch (const std::exception& ex) {
                cur.fail(std::string("bad value for ") + key + ": " + ex.what());
            }
        } else if (section == "connection") {
            if (key == "singular") {
                job.singular = value;
            } else {
                int k = -1;
                try {
                    k = std::stoi(key);
                } catch (const std::exception&) {
                    cur.fail("connection keys are z powers");
                }
                if (k >= 0) {
                    auto toks = split_ws(value);
                    Mat2<Rational> mat = parse_matrix(toks, 0, cur);
                    if (!cur.err) {
                        if (mat.trace() != 0) cur.fail("connection coefficient is not traceless");
                        if (static_cast<int>(job.connection.size()) <= k)
                            job.connection.resize(k + 1, mat2(0, 0, 0, 0));
                        job.connection[k] = mat;
                    }
                } else if (!cur.err) {
                    cur.fail("connection keys are z powers");
                }
            }
        } else if (section == "gauge") {
            int k = -1;
            try {
                k = std::stoi(key);
            } catch (const std::exception&) {
                cur.fail("gauge keys are z powers");
            }
            if (k >= 0) {
                auto toks = split_ws(value);
                Mat2<Rational> mat = parse_matrix(toks, 0, cur);
                if (!cur.err) {
                    if (static_cast<int>(job.gauge_f.size()) <= k)
                        job.gauge_f.resize(k + 1, mat2(0, 0, 0, 0));
                    job.gauge_f[k] = mat;
                }
            } else if (!cur.err) {
                cur.fail("gauge keys are z powers");
            }
        } else if (section == "algebra") {
            if (key == "generators") {
                for (const auto& name : split_ws(value)) inline_spec.gens.push_back({name, false});
                inline_gens_seen = true;
            } else if (key == "parity") {
                auto toks = split_ws(value);
                if (toks.size() != inline_spec.gens.size()) cur.fail("parity list length mismatch");
                else
                    for (size_t i = 0; i < toks.size(); ++i)
                        inline_spec.gens[i].odd = (toks[i] == "odd");
            } else if (key.rfind("ope", 0) == 0) {
                if (!inline_gens_seen) cur.fail("generators must precede ope entries");
                else parse_ope_line(inline_spec, key, value, cur);
            } else {
                cur.fail("unknown algebra key: " + key);
            }
        }
        if (cur.err) break;
    }

    if (!cur.err) {
        if (job.truncation < 2) cur.fail("truncation must be at least 2");
        if (job.group != "sl2") cur.fail("the only supported group is sl2");
        if (has_inline) {
            if (inline_spec.gens.size() != 2)
                cur.fail("inline algebras carry exactly two doublet generators");
            job.inline_algebra = inline_spec;
        }
    }
    if (cur.err) return *cur.err;
    return job;
}

std::variant<JobSpec, SpecError> parse_jobspec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return SpecError{0, "cannot open spec file: " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_jobspec(buf.str());
}

} // namespace bigcenter
