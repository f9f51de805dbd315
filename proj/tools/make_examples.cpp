// Writes the sample inputs under data/ from exact library objects.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "abelsub/algebra_io.hpp"
#include "abelsub/bsub_file.hpp"
#include "abelsub/jordan.hpp"
#include "abelsub/pipeline.hpp"
#include "abelsub/text_formats.hpp"

using namespace abelsub;
namespace fs = std::filesystem;

namespace {

GaussScalar q(long n, long d = 1) { return GaussScalar::ratio(n, d); }

PartitionOfUnity finest_diagonal(const FinDimAlgebra& a) {
    std::size_t n = 0;
    for (auto d : a.summand_dims()) n += d;
    std::vector<AlgElement> atoms;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<GaussScalar> e(n, q(0));
        e[i] = 1;
        atoms.push_back(AlgElement::diagonal(a, e));
    }
    return PartitionOfUnity::make(a, atoms);
}

AlgElement corner(const FinDimAlgebra& a, GaussScalar a00, GaussScalar a01, GaussScalar a10, GaussScalar a11) {
    std::vector<Matrix> blocks = AlgElement::identity(a).blocks();
    blocks[0](0, 0) = a00;
    blocks[0](0, 1) = a01;
    blocks[0](1, 0) = a10;
    blocks[0](1, 1) = a11;
    return AlgElement(a, blocks);
}

AlgElement complex_rotation(const FinDimAlgebra& a) {
    return corner(a, q(3, 5), GaussScalar(0, mpq_class(4, 5)), GaussScalar(0, mpq_class(4, 5)), q(3, 5));
}

AlgElement real_rotation(const FinDimAlgebra& a) { return corner(a, q(3, 5), q(4, 5), q(-4, 5), q(3, 5)); }

AlgElement permutation(const FinDimAlgebra& a) {
    std::vector<Matrix> blocks = AlgElement::identity(a).blocks();
    std::size_t n = a.summand_dims()[0];
    blocks[0] = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) blocks[0]((i + 1) % n, i) = 1;
    return AlgElement(a, blocks);
}

PartitionOfUnity rotate(const PartitionOfUnity& p, const AlgElement& u) {
    std::vector<AlgElement> atoms;
    for (const auto& x : p.atoms()) atoms.push_back(u * x * u.adjoint());
    return PartitionOfUnity::make(p.parent(), atoms);
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
    std::cout << p.string() << '\n';
}

void instance(const fs::path& dir, const std::string& stem, const AbelianFragment& base, const JordanMap& g) {
    write(dir / (stem + "_left.yaml"), write_algebra(to_algebra_file(base)));
    write(dir / (stem + "_right.yaml"), write_algebra(to_algebra_file(image_fragment(g, base))));
    InstanceFile f{stem + "_left.yaml", stem + "_right.yaml", true, {}};
    for (const auto& np : base.partitions())
        if (np.partition.size() > 1) f.fmap.emplace_back(np.name, np.name);
    write(dir / (stem + ".inst"), write_instance(f));
}

}  // namespace

int main(int argc, char** argv) {
    fs::path dir = argc > 1 ? argv[1] : "data";
    fs::create_directories(dir);

    write(dir / "mo2.oml", write_oml(standard("mo", 2)));
    write(dir / "boolean3.oml", write_oml(standard("boolean", 3)));
    write(dir / "pentagon.oml",
          "# the pentagon N5 is a lattice without an orthocomplementation\n"
          "elements 0 a b c 1\nle 0 a\nle a b\nle b 1\nle 0 c\nle c 1\n"
          "ortho 0 1\northo a c\northo b b\n");
    write(dir / "malformed.oml", "elements 0 1\nle 0\northo 0 1\n");
    write(dir / "loop5.greechie", "atoms a b c d e f g h i j\n"
                                  "block a b c\nblock c d e\nblock e f g\nblock g h i\nblock i j a\n");
    write(dir / "loop3.greechie", "atoms a b c d e f\nblock a b c\nblock c d e\nblock e f a\n");

    BsubIsoFile mo2{{"standard", "mo", "2"}, {"standard", "mo", "2"}, true, {}};
    write(dir / "mo2_identity.bsub", write_bsub_iso(mo2));
    BsubIsoFile hs{{"standard", "horizontal_sum_b8", "2"}, {"standard", "horizontal_sum_b8", "2"}, true, {}};
    write(dir / "hsb8_identity.bsub", write_bsub_iso(hs));

    FinDimAlgebra m3({3});
    auto d3 = finest_diagonal(m3);
    AbelianFragment f3(m3, {{"d", d3}, {"r", rotate(d3, complex_rotation(m3))}});
    instance(dir, "perm3", f3, JordanMap::conjugation(permutation(m3)));
    instance(dir, "antirot3", f3, JordanMap::transpose(m3).after(JordanMap::conjugation(real_rotation(m3))));

    FinDimAlgebra m31({3, 1});
    auto d31 = finest_diagonal(m31);
    AbelianFragment f31(m31, {{"d", d31}, {"r", rotate(d31, complex_rotation(m31))}});
    instance(dir, "transpose31", f31, JordanMap::transpose(m31));

    FinDimAlgebra m2({2});
    auto d2 = finest_diagonal(m2);
    AbelianFragment f2(m2, {{"p", d2}, {"q", rotate(d2, complex_rotation(m2))}});
    write(dir / "dims2.yaml", write_algebra(to_algebra_file(f2)));
    write(dir / "dims2.inst", write_instance(InstanceFile{"dims2.yaml", "dims2.yaml", false, {{"p", "p"}, {"q", "q"}}}));
    write(dir / "missing.inst", write_instance(InstanceFile{"no_such_algebra.yaml", "dims2.yaml", false, {}}));
    write(dir / "not_partition.yaml", "summands: [2]\npartitions:\n  half:\n    - [[[\"1/2\", \"0\"], [\"0\", \"1/2\"]]]\n"
                                      "    - [[[\"1/2\", \"0\"], [\"0\", \"1/2\"]]]\n");
    return 0;
}
