#include "abelsub/algebra_io.hpp"

#include <yaml-cpp/yaml.h>

#include "abelsub/text_formats.hpp"

namespace abelsub {

std::vector<NamedPartition> AlgebraFile::named_partitions() const {
    std::vector<NamedPartition> out;
    for (const auto& [name, atoms] : partitions) {
        try {
            out.push_back({name, PartitionOfUnity::make(algebra, atoms)});
        } catch (const AlgebraError& e) {
            throw AlgebraError(e.code(), "partition " + name + ": " + e.what());
        }
    }
    return out;
}

AbelianFragment AlgebraFile::fragment(bool require_closed) const {
    return AbelianFragment(algebra, named_partitions(), require_closed);
}

namespace {

std::size_t line_of(const YAML::Node& n) { return static_cast<std::size_t>(n.Mark().line) + 1; }

AlgElement parse_element(const FinDimAlgebra& a, const YAML::Node& node, std::string_view source) {
    if (!node.IsSequence() || node.size() != a.summands())
        throw ParseError(source, line_of(node), "atom needs one block per summand");
    std::vector<Matrix> blocks;
    for (std::size_t s = 0; s < a.summands(); ++s) {
        std::size_t n = a.summand_dims()[s];
        const YAML::Node b = node[s];
        if (!b.IsSequence() || b.size() != n)
            throw ParseError(source, line_of(b), "block " + std::to_string(s) + " needs " + std::to_string(n) + " rows");
        Matrix m(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            const YAML::Node row = b[r];
            if (!row.IsSequence() || row.size() != n)
                throw ParseError(source, line_of(row), "row needs " + std::to_string(n) + " entries");
            for (std::size_t c = 0; c < n; ++c) {
                try {
                    m(r, c) = GaussScalar::parse(row[c].as<std::string>());
                } catch (const ParseError& e) {
                    throw ParseError(source, line_of(row[c]), e.what());
                }
            }
        }
        blocks.push_back(std::move(m));
    }
    return AlgElement(a, std::move(blocks));
}

}  // namespace

AlgebraFile parse_algebra(std::string_view text, std::string_view source) {
    AlgebraFile out;
    try {
        YAML::Node root = YAML::Load(std::string(text));
        if (!root.IsMap()) throw ParseError(source, 1, "expected a mapping with summands");
        for (const auto& kv : root) {
            auto key = kv.first.as<std::string>();
            if (key != "summands" && key != "partitions")
                throw ParseError(source, line_of(kv.first), "unknown key " + key);
        }
        const YAML::Node dims = root["summands"];
        if (!dims || !dims.IsSequence()) throw ParseError(source, 1, "missing summands list");
        std::vector<std::size_t> d;
        for (const auto& x : dims) {
            long v = x.as<long>();
            if (v <= 0) throw ParseError(source, line_of(x), "summand dimensions must be positive");
            d.push_back(static_cast<std::size_t>(v));
        }
        if (d.empty()) throw ParseError(source, line_of(dims), "need at least one summand");
        out.algebra = FinDimAlgebra(d);
        if (const YAML::Node parts = root["partitions"]) {
            if (!parts.IsMap()) throw ParseError(source, line_of(parts), "partitions must be a mapping");
            for (const auto& kv : parts) {
                std::vector<AlgElement> atoms;
                if (!kv.second.IsSequence()) throw ParseError(source, line_of(kv.second), "partition needs a list of atoms");
                for (const auto& atom : kv.second) atoms.push_back(parse_element(out.algebra, atom, source));
                out.partitions.emplace_back(kv.first.as<std::string>(), std::move(atoms));
            }
        }
    } catch (const YAML::Exception& e) {
        throw ParseError(source, static_cast<std::size_t>(e.mark.line) + 1, e.msg);
    }
    return out;
}

AlgebraFile read_algebra(const std::string& path) { return parse_algebra(read_file(path), path); }

std::string write_algebra(const AlgebraFile& f) {
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "summands" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (std::size_t n : f.algebra.summand_dims()) out << n;
    out << YAML::EndSeq;
    if (!f.partitions.empty()) {
        out << YAML::Key << "partitions" << YAML::Value << YAML::BeginMap;
        for (const auto& [name, atoms] : f.partitions) {
            out << YAML::Key << name << YAML::Value << YAML::BeginSeq;
            for (const auto& atom : atoms) {
                out << YAML::Flow << YAML::BeginSeq;
                for (const auto& m : atom.blocks()) {
                    out << YAML::BeginSeq;
                    for (std::size_t r = 0; r < m.rows(); ++r) {
                        out << YAML::BeginSeq;
                        for (std::size_t c = 0; c < m.cols(); ++c) out << YAML::DoubleQuoted << m(r, c).to_string();
                        out << YAML::EndSeq;
                    }
                    out << YAML::EndSeq;
                }
                out << YAML::EndSeq;
            }
            out << YAML::EndSeq;
        }
        out << YAML::EndMap;
    }
    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

AlgebraFile to_algebra_file(const AbelianFragment& f) {
    AlgebraFile out;
    out.algebra = f.parent();
    for (const auto& np : f.partitions()) out.partitions.emplace_back(np.name, np.partition.atoms());
    return out;
}

}  // namespace abelsub
