#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ramval/extension.hpp"
#include "ramval/kummer.hpp"
#include "ramval/sampling.hpp"

namespace ramval {

/// One runnable scenario: a ground field, an extension (or Kummer formula
/// input), a truncation policy, and oracle settings.
struct Scenario {
    std::string name;
    ExtKind kind = ExtKind::ArtinSchreier;
    GroundFieldSpec ground;
    TruncationPolicy truncation;
    HahnSeries rhs;
    bool rhs_tail_negative = false;
    std::optional<KummerFormulaInput> kummer;
    OracleConfig oracle;
    std::vector<Rat> trace_z_values{Rat(0)};
};

namespace detail {

inline std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!strip(cur).empty() || !out.empty()) out.push_back(strip(cur));
    return out;
}

/// Series literal: a list of [exponent, coefficient-vector] pairs with an
/// optional third entry for the u-exponent, e.g.
///   [[-1, [1]], [0, [1,1]]]        -- t^-1 + (1 + x)
///   [[-2, [1], 1]]                 -- u * t^-2
class SeriesParser {
public:
    SeriesParser(const std::string& text, int line, std::uint32_t q, int max_terms)
        : s_(text), line_(line), q_(q), max_terms_(max_terms) {}

    HahnSeries parse() {
        skip();
        HahnSeries out = HahnSeries::zero(q_, max_terms_);
        expect('[');
        skip();
        if (peek() == ']') { take(); return out; }
        for (;;) {
            out = out + term();
            skip();
            if (peek() == ',') { take(); continue; }
            expect(']');
            break;
        }
        return out;
    }

private:
    HahnSeries term() {
        expect('[');
        Rat exp = rat();
        skip();
        expect(',');
        Coeff c = coeff_vec();
        skip();
        if (peek() == ',') {
            take();
            Rat uexp = rat();
            Coeff shifted = Coeff::zero(q_);
            for (const auto& [e, fq] : c.terms()) shifted = shifted + Coeff(q_, e + uexp, fq);
            c = shifted;
        }
        skip();
        expect(']');
        return HahnSeries::monomial(q_, exp, c, max_terms_);
    }

    Coeff coeff_vec() {
        skip();
        expect('[');
        Coeff c = Coeff::zero(q_);
        std::uint32_t p = FqField::get(q_).p();
        std::uint32_t mul = 1, rep = 0;
        int idx = 0;
        for (;;) {
            Rat v = rat();
            if (!v.is_integer()) throw ParseError(line_, "field coordinates must be integers");
            std::int64_t digit = v.num() % (std::int64_t)p;
            if (digit < 0) digit += p;
            if (idx >= (int)FqField::get(q_).degree())
                throw ParseError(line_, "too many field coordinates for F_" + std::to_string(q_));
            rep += (std::uint32_t)digit * mul;
            mul *= p;
            ++idx;
            skip();
            if (peek() == ',') { take(); continue; }
            expect(']');
            break;
        }
        return Coeff(FqElem(q_, rep));
    }

    Rat rat() {
        skip();
        std::string tok;
        while (pos_ < s_.size() &&
               (isdigit((unsigned char)s_[pos_]) || s_[pos_] == '-' || s_[pos_] == '/'))
            tok += s_[pos_++];
        if (tok.empty()) throw ParseError(line_, "expected a rational number");
        try {
            return Rat::parse(tok);
        } catch (const InvalidInput& e) {
            throw ParseError(line_, e.what());
        }
    }

    char peek() {
        if (pos_ >= s_.size()) throw ParseError(line_, "unexpected end of series literal");
        return s_[pos_];
    }
    char take() { return s_[pos_++]; }
    void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError(line_, std::string("expected '") + c + "' in series literal");
        ++pos_;
    }
    void skip() {
        while (pos_ < s_.size() && isspace((unsigned char)s_[pos_])) ++pos_;
    }

    const std::string& s_;
    int line_;
    std::uint32_t q_;
    int max_terms_;
    size_t pos_ = 0;
};

struct RawScenario {
    // section -> ordered (key, value, line) triples
    std::map<std::string, std::vector<std::tuple<std::string, std::string, int>>> sections;

    const std::string* find(const std::string& sec, const std::string& key) const {
        auto it = sections.find(sec);
        if (it == sections.end()) return nullptr;
        for (const auto& [k, v, l] : it->second)
            if (k == key) return &v;
        return nullptr;
    }
    int line_of(const std::string& sec, const std::string& key) const {
        auto it = sections.find(sec);
        if (it == sections.end()) return 0;
        for (const auto& [k, v, l] : it->second)
            if (k == key) return l;
        return 0;
    }
    std::string need(const std::string& sec, const std::string& key, int& line) const {
        const std::string* v = find(sec, key);
        if (!v) throw ParseError(line, "missing '" + key + "' in section [" + sec + "]");
        line = line_of(sec, key);
        return *v;
    }
};

inline RawScenario read_sections(std::istream& in) {
    RawScenario raw;
    std::string line, section;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw ParseError(no, "unterminated section header");
            section = strip(t.substr(1, t.size() - 2));
            raw.sections[section];
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos) throw ParseError(no, "expected 'key = value'");
        if (section.empty()) throw ParseError(no, "key outside of any section");
        raw.sections[section].emplace_back(strip(t.substr(0, eq)), strip(t.substr(eq + 1)), no);
    }
    return raw;
}

inline Rat parse_rat_at(const std::string& s, int line) {
    try {
        return Rat::parse(s);
    } catch (const InvalidInput& e) {
        throw ParseError(line, e.what());
    }
}

} // namespace detail

inline Scenario parse_scenario(std::istream& in) {
    using namespace detail;
    RawScenario raw = read_sections(in);
    Scenario sc;
    int ln = 1;

    sc.name = raw.need("scenario", "name", ln);
    std::string kind = raw.need("scenario", "kind", ln);
    if (kind == "artin_schreier") sc.kind = ExtKind::ArtinSchreier;
    else if (kind == "tower_as") sc.kind = ExtKind::TowerAS;
    else if (kind == "kummer_formula") sc.kind = ExtKind::KummerFormula;
    else throw ParseError(ln, "unknown kind '" + kind + "'");

    if (const std::string* v = raw.find("truncation", "trunc_exponent"))
        sc.truncation.trunc_exponent = parse_rat_at(*v, raw.line_of("truncation", "trunc_exponent"));
    if (const std::string* v = raw.find("truncation", "max_terms"))
        sc.truncation.max_terms = (int)parse_rat_at(*v, raw.line_of("truncation", "max_terms")).num();
    if (sc.truncation.max_terms < 1)
        throw ParseError(raw.line_of("truncation", "max_terms"), "max_terms must be >= 1");

    if (sc.kind == ExtKind::KummerFormula) {
        KummerFormulaInput ki;
        ki.p = parse_rat_at(raw.need("kummer_formula", "p", ln), ln).num();
        ki.vp = parse_rat_at(raw.need("kummer_formula", "vp", ln), ln);
        std::string c = raw.need("kummer_formula", "case", ln);
        if (c == "residue_gen") ki.kcase = KummerCase::ResidueGen;
        else if (c == "unit_gen") ki.kcase = KummerCase::UnitGen;
        else if (c == "defect") ki.kcase = KummerCase::Defect;
        else throw ParseError(ln, "unknown Kummer case '" + c + "'");
        if (const std::string* v = raw.find("kummer_formula", "e_or_f"))
            ki.e_side = (*v == "e");
        if (const std::string* v = raw.find("kummer_formula", "v_eta_minus_1"))
            ki.v_eta_minus_1 = parse_rat_at(*v, raw.line_of("kummer_formula", "v_eta_minus_1"));
        std::vector<Rat> gens;
        for (const auto& g : split(raw.need("kummer_formula", "vK_generators", ln), ','))
            gens.push_back(parse_rat_at(g, ln));
        bool div = false;
        if (const std::string* v = raw.find("kummer_formula", "vK_divisible_coprime_to_p"))
            div = (*v == "true");
        ki.vK = ValueGroup(ki.p, gens, div);
        if (ki.kcase == KummerCase::Defect) {
            Rat sup = parse_rat_at(raw.need("kummer_formula", "v_eta_minus_K_sup", ln), ln);
            ki.v_eta_minus_K = FinalSegment{sup, false, ki.vK};
        }
        sc.kummer = ki;
    } else {
        std::int64_t p = parse_rat_at(raw.need("ground", "p", ln), ln).num();
        std::vector<Rat> gens;
        for (const auto& g : split(raw.need("ground", "generators", ln), ','))
            gens.push_back(parse_rat_at(g, ln));
        bool div = false;
        if (const std::string* v = raw.find("ground", "divisible_coprime_to_p"))
            div = (*v == "true");
        sc.ground.value_group = ValueGroup(p, gens, div);

        std::string res = raw.need("ground", "residue", ln);
        auto parts = split(res, ' ');
        if (parts[0] == "prime") {
            sc.ground.residue_kind = ResidueKind::PrimeField;
            sc.ground.residue_q = (std::uint32_t)p;
        } else if (parts[0] == "fq" && parts.size() == 2) {
            sc.ground.residue_kind = ResidueKind::Fq;
            sc.ground.residue_q = (std::uint32_t)parse_rat_at(parts[1], ln).num();
        } else if (parts[0] == "fq_rational" && parts.size() == 2) {
            sc.ground.residue_kind = ResidueKind::RationalFunction;
            sc.ground.residue_q = (std::uint32_t)parse_rat_at(parts[1], ln).num();
        } else {
            throw ParseError(ln, "residue must be 'prime', 'fq <q>' or 'fq_rational <q>'");
        }
        sc.ground.ambient_q = (std::uint32_t)p;
        if (const std::string* v = raw.find("ground", "ambient_q"))
            sc.ground.ambient_q = (std::uint32_t)parse_rat_at(*v, raw.line_of("ground", "ambient_q")).num();

        std::string rhs = raw.need("extension", "rhs", ln);
        sc.rhs = SeriesParser(rhs, ln, sc.ground.ambient_q, sc.truncation.max_terms).parse();
        if (const std::string* v = raw.find("extension", "rhs_tail_negative"))
            sc.rhs_tail_negative = (*v == "true");

        if (raw.sections.count("approximants")) {
            if (const std::string* v = raw.find("approximants", "prefix_exponents")) {
                int l = raw.line_of("approximants", "prefix_exponents");
                HahnSeries acc = HahnSeries::zero(sc.ground.ambient_q, sc.truncation.max_terms);
                for (const auto& e : split(*v, ',')) {
                    acc = acc + HahnSeries::monomial(sc.ground.ambient_q, parse_rat_at(e, l),
                                                     Coeff::one(sc.ground.ambient_q),
                                                     sc.truncation.max_terms);
                    sc.ground.approximants.push_back(acc);
                }
            } else {
                for (const auto& [k, v, l] : raw.sections.at("approximants")) {
                    if (k == "sup") continue;
                    sc.ground.approximants.push_back(
                        SeriesParser(v, l, sc.ground.ambient_q, sc.truncation.max_terms).parse());
                }
            }
            if (const std::string* v = raw.find("approximants", "sup"))
                sc.ground.approximant_sup = parse_rat_at(*v, raw.line_of("approximants", "sup"));
        }
    }

    if (const std::string* v = raw.find("oracle", "samples"))
        sc.oracle.samples = (int)parse_rat_at(*v, raw.line_of("oracle", "samples")).num();
    if (const std::string* v = raw.find("oracle", "seed"))
        sc.oracle.seed = (std::uint64_t)parse_rat_at(*v, raw.line_of("oracle", "seed")).num();
    if (const std::string* v = raw.find("oracle", "trace_z_values")) {
        sc.trace_z_values.clear();
        for (const auto& z : split(*v, ','))
            sc.trace_z_values.push_back(parse_rat_at(z, raw.line_of("oracle", "trace_z_values")));
    }
    return sc;
}

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open scenario file: " + path);
    return parse_scenario(in);
}

} // namespace ramval
