#include "dioph/specparse.hpp"

#include <map>
#include <sstream>

namespace dioph {

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct Piece {
    std::string_view text;
    std::size_t offset;
};

std::vector<Piece> split(std::string_view s, char sep, std::size_t offset) {
    std::vector<Piece> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            std::size_t off = offset + start;
            const std::string_view t = trim(s.substr(start, i - start), off);
            out.push_back({t, off});
            start = i + 1;
        }
    }
    return out;
}

Rational parse_rational_at(const Piece& p) {
    if (p.text.empty()) throw ParseError(p.offset, "empty number");
    try {
        return Rational::parse(p.text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(p.offset, "bad rational '" + std::string(p.text) + "'");
    }
}

Integer parse_integer_at(const Piece& p) {
    const Rational q = parse_rational_at(p);
    if (!q.is_integer()) throw ParseError(p.offset, "expected an integer, got '" + std::string(p.text) + "'");
    return q.num();
}

std::vector<Integer> parse_integer_list(const Piece& p) {
    std::vector<Integer> out;
    for (const auto& item : split(p.text, ',', p.offset)) out.push_back(parse_integer_at(item));
    return out;
}

std::string join(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
    return out;
}

std::string join(const std::vector<Integer>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
    return out;
}

LinearFormSystem parse_hyperplanes(std::string_view text) {
    std::vector<Hyperplane> forms;
    for (const auto& vec : split(text, ';', 0)) {
        const auto coeffs = parse_rational_list(vec.text, vec.offset);
        bool zero = true;
        for (const auto& c : coeffs) zero = zero && c.is_zero();
        if (zero) throw ParseError(vec.offset, "zero hyperplane");
        forms.emplace_back(std::span<const Rational>(coeffs));
    }
    return LinearFormSystem(std::move(forms));
}

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text, std::size_t offset) {
    std::vector<Rational> out;
    for (const auto& item : split(text, ',', offset)) out.push_back(parse_rational_at(item));
    return out;
}

ParsedSpec parse_equation_spec(std::string_view text) {
    if (text.find('=') == std::string_view::npos) return parse_hyperplanes(text);

    std::map<std::string, Piece> kv;
    for (const auto& entry : split(text, ';', 0)) {
        if (entry.text.empty()) continue;
        const auto eq = entry.text.find('=');
        if (eq == std::string_view::npos) throw ParseError(entry.offset, "expected key=value");
        std::size_t koff = entry.offset;
        const std::string key(trim(entry.text.substr(0, eq), koff));
        std::size_t voff = entry.offset + eq + 1;
        const std::string_view value = trim(entry.text.substr(eq + 1), voff);
        if (kv.count(key)) throw ParseError(koff, "duplicate key '" + key + "'");
        kv.emplace(key, Piece{value, voff});
    }
    const auto allow = [&](std::initializer_list<const char*> keys) {
        for (const auto& [key, piece] : kv) {
            bool ok = false;
            for (const char* k : keys) ok = ok || key == k;
            if (!ok) throw ParseError(piece.offset - key.size() - 1, "unknown key '" + key + "'");
        }
    };
    const auto get = [&](const char* key) -> const Piece* {
        const auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    const auto rational_or = [&](const char* key, Rational fallback) {
        const Piece* p = get(key);
        return p ? parse_rational_at(*p) : fallback;
    };

    if (const Piece* fam = get("family")) {
        const Family family = [&] {
            try {
                return parse_family(std::string(fam->text));
            } catch (const std::invalid_argument&) {
                throw ParseError(fam->offset, "unknown family '" + std::string(fam->text) + "'");
            }
        }();
        const auto require = [&](const char* key) -> const Piece& {
            const Piece* p = get(key);
            if (!p) throw ParseError(text.size(), std::string("missing key '") + key + "'");
            return *p;
        };
        CurveSpec spec;
        switch (family) {
            case Family::Mordell:
                allow({"family", "k"});
                spec = CurveSpec::mordell(parse_integer_at(require("k")));
                break;
            case Family::Elliptic:
                allow({"family", "f"});
                spec = CurveSpec::elliptic(parse_integer_list(require("f")));
                break;
            case Family::Hyperelliptic:
                allow({"family", "f"});
                spec = CurveSpec::hyperelliptic(parse_integer_list(require("f")));
                break;
            case Family::Superelliptic: {
                allow({"family", "f", "m"});
                const Integer m = parse_integer_at(require("m"));
                if (m < 0 || !m.fits_uint_p()) throw ParseError(require("m").offset, "bad exponent");
                spec = CurveSpec::superelliptic(parse_integer_list(require("f")), static_cast<unsigned>(m.get_ui()));
                break;
            }
            case Family::ThueClassic: {
                allow({"family", "roots", "k"});
                const Piece& r = require("roots");
                spec = CurveSpec::thue(parse_rational_list(r.text, r.offset), rational_or("k", 1));
                break;
            }
            case Family::SiegelUnits: {
                allow({"family", "a1", "a2", "primes"});
                const Piece* p = get("primes");
                SContext s;
                if (p && !p->text.empty()) s = SContext(parse_integer_list(*p));
                spec = CurveSpec::siegel(rational_or("a1", 1), rational_or("a2", 1), s);
                break;
            }
        }
        spec.validate();
        return spec;
    }

    if (const Piece* form = get("form")) {
        allow({"form", "k"});
        std::string f(form->text);
        std::erase(f, ' ');
        if (f != "xy(x-y)") throw ParseError(form->offset, "unknown form '" + std::string(form->text) + "'");
        return BinaryFormSpec::xy_x_minus_y(rational_or("k", 1));
    }

    allow({"roots", "k", "H"});
    const Piece* r = get("roots");
    if (!r) throw ParseError(0, "expected roots=, form=, family= or a hyperplane list");
    const auto roots = parse_rational_list(r->text, r->offset);
    if (roots.size() != 3) throw ParseError(r->offset, "expected exactly three roots");
    std::vector<Rational> cofactor{Rational(1)};
    if (const Piece* h = get("H")) cofactor = parse_rational_list(h->text, h->offset);
    return BinaryFormSpec::split({roots[0], roots[1], roots[2]}, cofactor, rational_or("k", 1));
}

std::string format_equation_spec(const ParsedSpec& spec) {
    std::ostringstream os;
    if (const auto* f = std::get_if<BinaryFormSpec>(&spec)) {
        if (f->kind() == FormKind::XYXminusY) {
            os << "form=xy(x-y);k=" << f->k().to_string();
        } else {
            os << "roots=" << join(std::vector<Rational>(f->roots().begin(), f->roots().end()))
               << ";k=" << f->k().to_string() << ";H=" << join(f->cofactor());
        }
    } else if (const auto* c = std::get_if<CurveSpec>(&spec)) {
        os << "family=" << to_string(c->family);
        switch (c->family) {
            case Family::Mordell: os << ";k=" << c->k.get_str(); break;
            case Family::Elliptic:
            case Family::Hyperelliptic: os << ";f=" << join(c->f); break;
            case Family::Superelliptic: os << ";f=" << join(c->f) << ";m=" << c->m; break;
            case Family::ThueClassic: os << ";roots=" << join(c->roots) << ";k=" << c->thue_k.to_string(); break;
            case Family::SiegelUnits:
                os << ";a1=" << c->a1.to_string() << ";a2=" << c->a2.to_string() << ";primes=" << join(c->s.primes());
                break;
        }
    } else {
        const auto& sys = std::get<LinearFormSystem>(spec);
        for (std::size_t i = 0; i < sys.forms().size(); ++i) {
            os << (i ? ";" : "");
            const auto& h = sys.forms()[i];
            os << join(h.coords());
        }
    }
    return os.str();
}

}  // namespace dioph
