#include "tropdesc/invariant_key.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <optional>

#include "tropdesc/errors.hpp"

namespace tropdesc {

int TangencyProfile::total_weight() const {
    int s = 0;
    for (int w : alpha) s += w;
    for (int w : beta) s += w;
    return s;
}

TangencyProfile TangencyProfile::canonical() const {
    TangencyProfile p = *this;
    std::sort(p.alpha.begin(), p.alpha.end(), std::greater<>());
    std::sort(p.beta.begin(), p.beta.end(), std::greater<>());
    return p;
}

bool TangencyProfile::all_free_unit() const {
    return alpha.empty() && std::all_of(beta.begin(), beta.end(), [](int w) { return w == 1; });
}

Correlator Correlator::canonical() const {
    Correlator c = *this;
    std::sort(c.insertions.begin(), c.insertions.end());
    return c;
}

InvariantKey InvariantKey::n(int d) { return InvariantKey(key::N{d}); }

InvariantKey InvariantKey::rel(int d, TangencyProfile profile) {
    profile = profile.canonical();
    if (profile.all_free_unit() && profile.total_weight() == d && d >= 1) return n(d);
    return InvariantKey(key::Rel{d, std::move(profile)});
}

InvariantKey InvariantKey::special(SpecialDegree degree) { return InvariantKey(key::Special{degree}); }

InvariantKey InvariantKey::psi_p(int d, int k) {
    if (k == 0) return n(d);
    return InvariantKey(key::PsiP{d, k});
}

InvariantKey InvariantKey::psi_l(int d, int k) { return InvariantKey(key::PsiL{d, k}); }
InvariantKey InvariantKey::psi_ll(int d) { return InvariantKey(key::PsiLL{d}); }
InvariantKey InvariantKey::correlator(Correlator c) { return InvariantKey(key::Corr{c.canonical()}); }

std::string to_string(Codim c) {
    switch (c) {
        case Codim::T0: return "T0";
        case Codim::T1: return "T1";
        case Codim::T2: return "T2";
    }
    return "?";
}

std::string to_string(const SpecialDegree& s) {
    const std::string d = "d=" + std::to_string(s.d);
    switch (s.tag) {
        case SpecialTag::Box: return "Box," + d;
        case SpecialTag::LineMinusKE: return "L-kE," + d + ",k=" + std::to_string(s.k1);
        case SpecialTag::LineMinusE1E2:
            return "L-k1E1-k2E2," + d + ",k1=" + std::to_string(s.k1) + ",k2=" + std::to_string(s.k2);
        case SpecialTag::LineMinusERel2: return "L-E-rel2," + d;
    }
    return "?";
}

namespace {

std::string list_str(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

struct Printer {
    std::string operator()(const key::N& k) const { return "N(d=" + std::to_string(k.d) + ")"; }
    std::string operator()(const key::Rel& k) const {
        return "rel(d=" + std::to_string(k.d) + ",a=" + list_str(k.profile.alpha) + ",b=" + list_str(k.profile.beta) + ")";
    }
    std::string operator()(const key::Special& k) const { return "special(" + to_string(k.degree) + ")"; }
    std::string operator()(const key::PsiP& k) const {
        return "psiP(d=" + std::to_string(k.d) + ",k=" + std::to_string(k.k) + ")";
    }
    std::string operator()(const key::PsiL& k) const {
        return "psiL(d=" + std::to_string(k.d) + ",k=" + std::to_string(k.k) + ")";
    }
    std::string operator()(const key::PsiLL& k) const { return "psiLL(d=" + std::to_string(k.d) + ")"; }
    std::string operator()(const key::Corr& k) const {
        std::string s = "corr(d=" + std::to_string(k.correlator.d) + ",[";
        bool first = true;
        for (const auto& ins : k.correlator.insertions) {
            if (!first) s += ",";
            first = false;
            s += to_string(ins.cls) + ":" + std::to_string(ins.psi);
        }
        return s + "])";
    }
};

// Minimal recursive-descent reader for the key grammar.
class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse key '" + std::string(text_) + "': " + what);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    void expect(std::string_view word) {
        if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
        pos_ += word.size();
    }

    bool accept(std::string_view word) {
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-' || peek() == '_')) ++pos_;
        if (start == pos_) fail("expected an identifier");
        return std::string(text_.substr(start, pos_ - start));
    }

    int integer() {
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc() || ptr != text_.data() + pos_) fail("expected an integer");
        return value;
    }

    int named(std::string_view name) {
        expect(name);
        expect('=');
        return integer();
    }

    std::vector<int> int_list() {
        std::vector<int> out;
        expect('[');
        if (accept(']')) return out;
        do {
            out.push_back(integer());
        } while (accept(','));
        expect(']');
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string InvariantKey::str() const { return std::visit(Printer{}, value_); }

InvariantKey InvariantKey::parse(std::string_view text) {
    Reader r(text);
    const std::string name = r.identifier();
    r.expect('(');
    std::optional<InvariantKey> result;
    if (name == "N") {
        result = n(r.named("d"));
    } else if (name == "rel") {
        int d = r.named("d");
        r.expect(',');
        r.expect("a=");
        auto a = r.int_list();
        r.expect(',');
        r.expect("b=");
        auto b = r.int_list();
        result = rel(d, TangencyProfile{a, b});
    } else if (name == "psiP" || name == "psiL") {
        int d = r.named("d");
        r.expect(',');
        int k = r.named("k");
        result = name == "psiP" ? psi_p(d, k) : psi_l(d, k);
    } else if (name == "psiLL") {
        result = psi_ll(r.named("d"));
    } else if (name == "special") {
        const std::string tag = r.identifier();
        r.expect(',');
        int d = r.named("d");
        if (tag == "Box") {
            result = special(SpecialDegree::box(d));
        } else if (tag == "L-kE") {
            r.expect(',');
            result = special(SpecialDegree::minus_ke(d, r.named("k")));
        } else if (tag == "L-k1E1-k2E2") {
            r.expect(',');
            int k1 = r.named("k1");
            r.expect(',');
            int k2 = r.named("k2");
            result = special(SpecialDegree::minus_e1e2(d, k1, k2));
        } else if (tag == "L-E-rel2") {
            result = special(SpecialDegree::minus_e_rel2(d));
        } else {
            r.fail("unknown special degree '" + tag + "'");
        }
    } else if (name == "corr") {
        Correlator c;
        c.d = r.named("d");
        r.expect(',');
        r.expect('[');
        if (!r.accept(']')) {
            do {
                Insertion ins;
                r.expect('T');
                int cls = r.integer();
                if (cls < 0 || cls > 2) r.fail("class must be T0, T1 or T2");
                ins.cls = static_cast<Codim>(cls);
                r.expect(':');
                ins.psi = r.integer();
                if (ins.psi < 0) r.fail("negative psi power");
                c.insertions.push_back(ins);
            } while (r.accept(','));
            r.expect(']');
        }
        result = correlator(std::move(c));
    } else {
        r.fail("unknown invariant kind '" + name + "'");
    }
    r.expect(')');
    if (!r.at_end()) r.fail("trailing characters");
    return *result;
}

}  // namespace tropdesc
