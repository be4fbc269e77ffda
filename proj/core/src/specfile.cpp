#include "innerfn/specfile.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace innerfn {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& s, int line) {
    const char* c = s.c_str();
    char* end = nullptr;
    double v = std::strtod(c, &end);
    if (end == c || *end != '\0')
        throw SpecParseError(line, "malformed number '" + s + "'");
    return v;
}

int parse_int(const std::string& s, int line) {
    const char* c = s.c_str();
    char* end = nullptr;
    long v = std::strtol(c, &end, 10);
    if (end == c || *end != '\0')
        throw SpecParseError(line, "malformed integer '" + s + "'");
    return static_cast<int>(v);
}

// REAL or REAL+IMAGi / REAL-IMAGi, no spaces.
Complex parse_complex(const std::string& s, int line) {
    const char* c = s.c_str();
    char* end = nullptr;
    double re = std::strtod(c, &end);
    if (end == c) throw SpecParseError(line, "malformed complex number '" + s + "'");
    if (*end == '\0') return {re, 0.0};
    if (*end != '+' && *end != '-')
        throw SpecParseError(line, "malformed complex number '" + s + "'");
    const char* c2 = end;
    double im = std::strtod(c2, &end);
    if (end == c2 || *end != 'i' || *(end + 1) != '\0')
        throw SpecParseError(line, "malformed complex number '" + s + "'");
    return {re, im};
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ';')) out.push_back(trim(item));
    if (!out.empty() && out.back().empty()) out.pop_back(); // allow a trailing ';'
    return out;
}

struct Section {
    bool singular = false;
    int line = 0;                                   // of the section header
    std::map<std::string, std::pair<std::string, int>> kv; // key -> (value, line)

    bool has(const std::string& k) const { return kv.count(k) != 0; }
    std::string take(const std::string& k, std::vector<std::string>& consumed) {
        consumed.push_back(k);
        return kv.at(k).first;
    }
    int line_of(const std::string& k) const { return kv.at(k).second; }

    void require(const std::string& k, const std::string& family) const {
        if (!has(k))
            throw SpecParseError(line, "family '" + family + "' needs key '" + k + "'");
    }
    void check_consumed(const std::vector<std::string>& consumed) const {
        for (const auto& e : kv) {
            bool used = false;
            for (const std::string& k : consumed) used = used || k == e.first;
            if (!used)
                throw SpecParseError(e.second.second,
                                     "key '" + e.first + "' is not used by this family");
        }
    }
};

ZeroFamily finish_blaschke(Section& sec) {
    std::vector<std::string> consumed;
    double rotation = 0.0;
    if (sec.has("rotation")) rotation = parse_double(sec.take("rotation", consumed),
                                                     sec.line_of("rotation"));

    std::string family = sec.has("zeros") ? "explicit" : "";
    if (sec.has("family")) family = sec.take("family", consumed);

    try {
        if (family == "explicit" || (family.empty() && sec.has("zeros"))) {
            sec.require("zeros", "explicit");
            int ln = sec.line_of("zeros");
            std::vector<Complex> zs;
            for (const std::string& item : split_list(sec.take("zeros", consumed)))
                zs.push_back(parse_complex(item, ln));
            sec.check_consumed(consumed);
            return ZeroFamily::explicit_list(zs, rotation);
        }
        if (family.empty())
            throw SpecParseError(sec.line, "blaschke section needs 'family' or 'zeros'");

        auto num = [&](const char* k) {
            sec.require(k, family);
            return parse_double(sec.take(k, consumed), sec.line_of(k));
        };
        auto cnt = [&]() {
            sec.require("count", family);
            return parse_int(sec.take("count", consumed), sec.line_of("count"));
        };
        if (family == "power") {
            double a = num("alpha");
            int c = cnt();
            sec.check_consumed(consumed);
            return ZeroFamily::power(a, c, rotation);
        }
        if (family == "logpower") {
            double a = num("alpha");
            int c = cnt();
            sec.check_consumed(consumed);
            return ZeroFamily::logpower(a, c, rotation);
        }
        if (family == "geometric") {
            double a = num("alpha");
            int c = cnt();
            sec.check_consumed(consumed);
            return ZeroFamily::geometric(a, c, rotation);
        }
        if (family == "doubleexp") {
            int c = cnt();
            sec.check_consumed(consumed);
            return ZeroFamily::double_exp(c, rotation);
        }
        if (family == "tangential") {
            double a = num("alpha");
            double g = num("gamma");
            int c = cnt();
            sec.check_consumed(consumed);
            return ZeroFamily::tangential(a, g, c, rotation);
        }
    } catch (const std::invalid_argument& e) {
        throw SpecParseError(sec.line, e.what());
    }
    throw SpecParseError(sec.has("family") ? sec.line_of("family") : sec.line,
                         "unknown zero family '" + family + "'");
}

AtomFamily finish_singular(Section& sec) {
    std::vector<std::string> consumed;
    std::string family = sec.has("atoms") ? "explicit" : "";
    if (sec.has("family")) family = sec.take("family", consumed);

    try {
        if (family == "explicit" || (family.empty() && sec.has("atoms"))) {
            sec.require("atoms", "explicit");
            int ln = sec.line_of("atoms");
            std::vector<Atom> atoms;
            for (const std::string& item : split_list(sec.take("atoms", consumed))) {
                size_t colon = item.find(':');
                if (colon == std::string::npos)
                    throw SpecParseError(ln, "atom entry '" + item + "' is not theta:gamma");
                atoms.push_back({parse_double(trim(item.substr(0, colon)), ln),
                                 parse_double(trim(item.substr(colon + 1)), ln)});
            }
            sec.check_consumed(consumed);
            return AtomFamily::explicit_list(atoms);
        }
        if (family == "dyadic_square") {
            sec.require("count", family);
            sec.require("gamma0", family);
            int c = parse_int(sec.take("count", consumed), sec.line_of("count"));
            double g0 = parse_double(sec.take("gamma0", consumed), sec.line_of("gamma0"));
            sec.check_consumed(consumed);
            return AtomFamily::dyadic_square(c, g0);
        }
    } catch (const std::invalid_argument& e) {
        throw SpecParseError(sec.line, e.what());
    }
    if (family.empty())
        throw SpecParseError(sec.line, "singular section needs 'family' or 'atoms'");
    throw SpecParseError(sec.has("family") ? sec.line_of("family") : sec.line,
                         "unknown atom family '" + family + "'");
}

const char* allowed_keys_blaschke[] = {"family", "alpha", "gamma", "count", "rotation", "zeros"};
const char* allowed_keys_singular[] = {"family", "count", "gamma0", "atoms"};

void check_known_key(const Section& sec, const std::string& key, int line) {
    if (sec.singular) {
        for (const char* k : allowed_keys_singular)
            if (key == k) return;
    } else {
        for (const char* k : allowed_keys_blaschke)
            if (key == k) return;
    }
    throw SpecParseError(line, "unknown key '" + key + "'");
}

std::string format_complex(Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

} // namespace

SpecParseError::SpecParseError(int line_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}

InnerFunctionSpec parse_spec(const std::string& text) {
    std::vector<ZeroFamily> blaschke;
    std::vector<AtomFamily> singular;

    Section sec;
    bool open = false;
    auto finish = [&]() {
        if (!open) return;
        if (sec.singular)
            singular.push_back(finish_singular(sec));
        else
            blaschke.push_back(finish_blaschke(sec));
        sec = Section{};
        open = false;
    };

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string s = trim(raw);
        if (s.empty()) continue;

        if (s.front() == '[') {
            if (s == "[blaschke]" || s == "[singular]") {
                finish();
                open = true;
                sec.singular = s == "[singular]";
                sec.line = line;
                continue;
            }
            throw SpecParseError(line, "unknown section '" + s + "'");
        }
        if (!open) throw SpecParseError(line, "key outside of a section");

        size_t eq = s.find('=');
        if (eq == std::string::npos) throw SpecParseError(line, "expected key = value");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty()) throw SpecParseError(line, "expected key = value");
        check_known_key(sec, key, line);
        if (sec.kv.count(key)) throw SpecParseError(line, "duplicate key '" + key + "'");
        sec.kv[key] = {value, line};
    }
    finish();

    if (blaschke.empty() && singular.empty())
        throw SpecParseError(1, "spec defines no inner function parts");
    return InnerFunctionSpec(std::move(blaschke), std::move(singular));
}

InnerFunctionSpec load_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecParseError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

std::string write_spec(const InnerFunctionSpec& spec) {
    std::string out;
    auto kv = [&out](const std::string& k, const std::string& v) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    };

    for (const ZeroFamily& f : spec.blaschke) {
        out += "[blaschke]\n";
        switch (f.kind()) {
        case ZeroKind::Power: kv("family", "power"); break;
        case ZeroKind::LogPower: kv("family", "logpower"); break;
        case ZeroKind::Geometric: kv("family", "geometric"); break;
        case ZeroKind::DoubleExp: kv("family", "doubleexp"); break;
        case ZeroKind::Tangential: kv("family", "tangential"); break;
        case ZeroKind::Explicit: {
            kv("family", "explicit");
            std::string zs;
            for (const Zero& z : f.zeros()) {
                if (!zs.empty()) zs += "; ";
                zs += format_complex(z.point); // rotation already applied
            }
            kv("zeros", zs);
            out += '\n';
            continue;
        }
        }
        if (f.kind() != ZeroKind::DoubleExp) kv("alpha", format_double(f.alpha()));
        if (f.kind() == ZeroKind::Tangential) kv("gamma", format_double(f.gamma()));
        kv("count", std::to_string(f.count()));
        kv("rotation", format_double(f.rotation()));
        out += '\n';
    }
    for (const AtomFamily& f : spec.singular) {
        out += "[singular]\n";
        if (f.kind() == AtomKind::DyadicSquare) {
            kv("family", "dyadic_square");
            kv("count", std::to_string(f.count()));
            kv("gamma0", format_double(f.gamma0()));
        } else {
            std::string as;
            for (const Atom& a : f.atoms()) {
                if (!as.empty()) as += "; ";
                as += format_double(a.theta) + ":" + format_double(a.gamma);
            }
            kv("atoms", as);
        }
        out += '\n';
    }
    return out;
}

InnerFunctionSpec builtin_example(const std::string& name) {
    if (name == "geometric2")
        return InnerFunctionSpec({ZeroFamily::geometric(2.0, 200)}, {});
    if (name == "power2")
        return InnerFunctionSpec({ZeroFamily::power(2.0, 200)}, {});
    if (name == "doubleexp")
        return InnerFunctionSpec({ZeroFamily::double_exp(6)}, {});
    if (name == "tangential-3-2")
        return InnerFunctionSpec({ZeroFamily::tangential(3.0, 2.0, 1000)}, {});
    if (name == "dyadic-square")
        return InnerFunctionSpec({}, {AtomFamily::dyadic_square(30, 1.0)});
    throw std::invalid_argument("unknown example '" + name + "'");
}

std::vector<std::string> builtin_example_names() {
    return {"geometric2", "power2", "doubleexp", "tangential-3-2", "dyadic-square"};
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Complex parse_complex_literal(const std::string& s) {
    try {
        return parse_complex(trim(s), 0);
    } catch (const SpecParseError&) {
        throw std::invalid_argument("malformed complex number '" + s + "'");
    }
}

void Report::add(const std::string& key, double value) { add(key, format_double(value)); }

void Report::add(const std::string& key, int value) { add(key, std::to_string(value)); }

void Report::add(const std::string& key, const std::string& value) {
    text_ += key;
    text_ += " = ";
    text_ += value;
    text_ += '\n';
}

void Report::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text_;
}

} // namespace innerfn
