#include "abelsub/text_formats.hpp"

#include <fstream>
#include <sstream>

namespace abelsub {

std::vector<TextLine> tokenize_lines(std::string_view text) {
    std::vector<TextLine> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::istringstream in{std::string(line)};
        TextLine tl{number, {}};
        for (std::string w; in >> w;) tl.words.push_back(w);
        if (!tl.words.empty()) out.push_back(std::move(tl));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

TextKind detect_kind(std::string_view text) {
    bool elements = false, ortho = false, atoms = false;
    for (const auto& l : tokenize_lines(text)) {
        const auto& w = l.words.front();
        elements |= w == "elements";
        ortho |= w == "ortho";
        atoms |= w == "atoms" || w == "block";
    }
    if (atoms) return TextKind::greechie;
    if (elements && ortho) return TextKind::oml;
    if (elements) return TextKind::poset;
    return TextKind::unknown;
}

namespace {

struct OrderText {
    std::vector<std::string> elements;
    Poset::Relation le;
    std::vector<std::pair<std::string, std::string>> ortho;
};

OrderText parse_order_text(std::string_view text, std::string_view source, bool allow_ortho) {
    OrderText t;
    for (const auto& l : tokenize_lines(text)) {
        const auto& w = l.words;
        if (w[0] == "elements") {
            t.elements.insert(t.elements.end(), w.begin() + 1, w.end());
        } else if (w[0] == "le") {
            if (w.size() != 3) throw ParseError(source, l.number, "expected 'le x y'");
            t.le.emplace_back(w[1], w[2]);
        } else if (w[0] == "ortho" && allow_ortho) {
            if (w.size() != 3) throw ParseError(source, l.number, "expected 'ortho x y'");
            t.ortho.emplace_back(w[1], w[2]);
        } else {
            throw ParseError(source, l.number, "unknown directive '" + w[0] + "'");
        }
    }
    return t;
}

}  // namespace

Poset parse_poset(std::string_view text, std::string_view source) {
    auto t = parse_order_text(text, source, false);
    return Poset::verify(std::move(t.elements), t.le);
}

Oml parse_oml(std::string_view text, std::string_view source) {
    auto t = parse_order_text(text, source, true);
    if (t.ortho.empty()) throw ParseError(std::string(source) + ": no 'ortho' lines");
    return Oml::verify(std::move(t.elements), t.le, t.ortho);
}

GreechieDiagram parse_greechie(std::string_view text, std::string_view source) {
    GreechieDiagram d;
    for (const auto& l : tokenize_lines(text)) {
        const auto& w = l.words;
        if (w[0] == "atoms") {
            d.atoms.insert(d.atoms.end(), w.begin() + 1, w.end());
        } else if (w[0] == "block") {
            d.blocks.emplace_back(w.begin() + 1, w.end());
        } else {
            throw ParseError(source, l.number, "unknown directive '" + w[0] + "'");
        }
    }
    d.validate();
    return d;
}

std::string write_poset(const Poset& p) {
    std::ostringstream out;
    out << "elements";
    for (const auto& e : p.elements()) out << ' ' << e;
    out << '\n';
    for (auto [lo, hi] : p.cover_pairs()) out << "le " << p.name(lo) << ' ' << p.name(hi) << '\n';
    return out.str();
}

std::string write_oml(const Oml& l) {
    std::string s = write_poset(l.order());
    std::ostringstream out;
    for (std::size_t x = 0; x < l.size(); ++x)
        if (x <= l.ortho(x)) out << "ortho " << l.name(x) << ' ' << l.name(l.ortho(x)) << '\n';
    return s + out.str();
}

std::string write_greechie(const GreechieDiagram& d) {
    std::ostringstream out;
    out << "atoms";
    for (const auto& a : d.atoms) out << ' ' << a;
    out << '\n';
    for (const auto& b : d.blocks) {
        out << "block";
        for (const auto& a : b) out << ' ' << a;
        out << '\n';
    }
    return out.str();
}

std::string write_bsub_dot(const BsubPoset& b) {
    std::ostringstream out;
    out << "digraph bsub {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < b.size(); ++i)
        out << "  " << b.poset->name(i) << " [label=\"" << b.describe(i) << "\"];\n";
    for (auto [lo, hi] : b.poset->cover_pairs())
        out << "  " << b.poset->name(lo) << " -> " << b.poset->name(hi) << ";\n";
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace abelsub
