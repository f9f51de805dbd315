#include "abelsub/bsub_file.hpp"

#include <filesystem>
#include <memory>
#include <sstream>

#include "abelsub/text_formats.hpp"

namespace abelsub {

Oml load_oml(const std::string& path) {
    std::string text = read_file(path);
    switch (detect_kind(text)) {
    case TextKind::oml:
        return parse_oml(text, path);
    case TextKind::greechie:
        return from_greechie(parse_greechie(text, path));
    default:
        throw ParseError(path + ": not an OML or Greechie file");
    }
}

BsubIsoFile parse_bsub_iso(std::string_view text, std::string_view source) {
    BsubIsoFile f;
    for (const auto& l : tokenize_lines(text)) {
        const auto& w = l.words;
        if (w[0] == "left" || w[0] == "right") {
            if (w.size() < 3) throw ParseError(source, l.number, "expected '" + w[0] + " oml|greechie|standard ...'");
            (w[0] == "left" ? f.left : f.right).assign(w.begin() + 1, w.end());
        } else if (w[0] == "identity") {
            f.identity = true;
        } else if (w[0] == "map") {
            if (w.size() != 3) throw ParseError(source, l.number, "expected 'map {..} {..}'");
            f.maps.emplace_back(w[1], w[2]);
        } else {
            throw ParseError(source, l.number, "unknown directive '" + w[0] + "'");
        }
    }
    if (f.left.empty() || f.right.empty()) throw ParseError(std::string(source) + ": missing left or right side");
    if (f.identity == !f.maps.empty())
        throw ParseError(std::string(source) + ": give either 'identity' or map lines");
    return f;
}

std::string write_bsub_iso(const BsubIsoFile& f) {
    std::ostringstream out;
    auto side = [&](const char* key, const std::vector<std::string>& w) {
        out << key;
        for (const auto& x : w) out << ' ' << x;
        out << '\n';
    };
    side("left", f.left);
    side("right", f.right);
    if (f.identity) out << "identity\n";
    for (const auto& [a, b] : f.maps) out << "map " << a << ' ' << b << '\n';
    return out.str();
}

namespace {

OmlPtr resolve_side(const std::vector<std::string>& w, const std::string& base) {
    if (w[0] == "standard") {
        if (w.size() != 3) throw ParseError("expected 'standard <name> <n>'");
        std::size_t n = 0;
        try {
            n = std::stoul(w[2]);
        } catch (const std::exception&) {
            throw ParseError("bad size '" + w[2] + "'");
        }
        try {
            return std::make_shared<const Oml>(standard(w[1], n));
        } catch (const OmlError& e) {
            throw ParseError(e.what());
        }
    }
    if (w.size() != 2) throw ParseError("expected '" + w[0] + " <path>'");
    std::filesystem::path p(w[1]);
    std::string full = (p.is_absolute() ? p : std::filesystem::path(base) / p).string();
    if (w[0] == "oml") return std::make_shared<const Oml>(parse_oml(read_file(full), full));
    if (w[0] == "greechie") return std::make_shared<const Oml>(from_greechie(parse_greechie(read_file(full), full)));
    throw ParseError("unknown side kind '" + w[0] + "'");
}

std::size_t resolve_members(const BsubPoset& b, const std::string& text) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw ParseError("member set '" + text + "' must be written {x,y,...}");
    Bits members(b.oml->size());
    std::string body = text.substr(1, text.size() - 2);
    std::istringstream in(body);
    std::string name;
    while (std::getline(in, name, ',')) {
        auto x = b.oml->order().index_of(name);
        if (!x) throw ParseError("unknown element '" + name + "' in " + text);
        members.set(*x);
    }
    auto d = b.find(members);
    if (!d) throw ParseError(text + " is not a Boolean subalgebra");
    return *d;
}

}  // namespace

BsubIso build_bsub_iso(const BsubIsoFile& f, const std::string& base_dir) {
    BsubPoset left = boolean_subalgebras(resolve_side(f.left, base_dir));
    BsubPoset right = boolean_subalgebras(resolve_side(f.right, base_dir));
    if (f.identity) {
        if (!(left.oml->order() == right.oml->order()))
            throw ParseError("identity needs the same lattice on both sides");
        std::vector<std::size_t> id(left.size());
        for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
        return BsubIso::make(left, right, id);
    }
    std::vector<std::size_t> map(left.size(), left.size());
    for (const auto& [a, b] : f.maps) {
        std::size_t i = resolve_members(left, a);
        if (map[i] != left.size()) throw ParseError(a + " is mapped twice");
        map[i] = resolve_members(right, b);
    }
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] == left.size()) throw ParseError("no map line for " + left.describe(i));
    return BsubIso::make(left, right, map);
}

BsubIso load_bsub_iso(const std::string& path) {
    BsubIsoFile f = parse_bsub_iso(read_file(path), path);
    try {
        return build_bsub_iso(f, std::filesystem::path(path).parent_path().string());
    } catch (const ParseError& e) {
        std::string w = e.what();
        const std::string prefix = "ParseError: ";
        throw ParseError(path + ": " + (w.rfind(prefix, 0) == 0 ? w.substr(prefix.size()) : w));
    }
}

}  // namespace abelsub
