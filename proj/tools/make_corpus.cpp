// Regenerates the regression corpus under the given directory (default
// "corpus"). The shipped files are committed; this tool exists so the
// corpus can be rebuilt deterministically from scratch:
//   ./build/tools/make_corpus [dir]

#include <fstream>
#include <iostream>

#include "qecc/derive.hpp"
#include "qecc/json_io.hpp"
#include "qecc/puncture.hpp"

using namespace qecc;

namespace {

AdditiveCode hexacode() {
    auto F4 = FieldCtx::get(2, 2);
    std::vector<Vec> rows = {{1, 0, 0, 1, 2, 2}, {0, 1, 0, 2, 1, 2}, {0, 0, 1, 2, 2, 1}};
    std::vector<Vec> gens;
    for (const auto& r : rows) {
        gens.push_back(r);
        gens.push_back(detail::scaled_row(*F4, r, 2));
    }
    return AdditiveCode(F4, Flavor::Plain, 6, gens, normal_pair(F4));
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "corpus";
    Json manifest = Json::array();

    auto add = [&](const std::string& file, const StabilizerCode& code) {
        std::ofstream os(dir + "/" + file);
        if (!os.good()) {
            std::cerr << "cannot write " << dir << "/" << file << "\n";
            std::exit(2);
        }
        os << stabilizer_to_json(code).dump(2) << "\n";
        Json entry{{"file", file},
                   {"family", code.provenance.family},
                   {"p", code.F->p()},
                   {"m", code.F->m()},
                   {"n", code.n},
                   {"k_exponent", code.k_exponent},
                   {"d_claimed", code.d_claimed},
                   {"d_verified", distance_status_name(code.d_status)}};
        entry["pure_to"] = code.pure_to ? Json(*code.pure_to) : Json(nullptr);
        manifest.push_back(entry);
        std::cout << file << "  " << code.params_string() << "\n";
    };

    const auto EX = DistanceMode::Exact;
    const auto SK = DistanceMode::Skip;

    add("five_qubit.json", quantum_hamming_hermitian(2, 2, EX));
    add("hamming_h_3_3.json", quantum_hamming_hermitian(3, 3, SK));
    add("steane.json", quantum_hamming_euclidean(2, 3, EX));
    add("hamming_e_2_4.json", quantum_hamming_euclidean(2, 4, EX));
    add("hamming_e_3_3.json", quantum_hamming_euclidean(3, 3, EX));
    add("qr_3_13.json", quantum_qr(3, 13, EX));
    add("qr_3_23.json", quantum_qr(3, 23, EX));
    add("qr_2_7.json", quantum_qr(2, 7, EX));
    add("melas_2_2.json", quantum_melas(2, 2, EX));
    add("melas_4_1.json", quantum_melas(4, 1, SK));
    add("bch_e_2_4_3.json", quantum_bch_euclidean(2, 4, 3, EX));
    add("bch_e_3_2_2.json", quantum_bch_euclidean(3, 2, 2, EX));
    add("bch_h_2_2_3.json", quantum_bch_hermitian(2, 2, 3, EX));
    add("bch_h_2_3_5.json", quantum_bch_hermitian(2, 3, 5, SK));
    add("bch_ext_2_2_3.json", extend_bch(quantum_bch_hermitian(2, 2, 3, SK), EX));
    add("character_3_2_0_1.json", quantum_character(3, 2, 0, 1, EX));
    add("character_5_3_0_2.json", quantum_character(5, 3, 0, 2, EX));
    add("character_3_3_1_2.json", quantum_character(3, 3, 1, 2, EX));

    Provenance hexprov{"hexacode", {}};
    add("hexacode.json", from_alternating(hexacode(), EX, hexprov));

    auto fq = quantum_hamming_hermitian(2, 2, EX);
    add("derived_lengthen.json", lengthen(fq, EX));
    add("derived_shorten.json", shorten_pure(fq, EX));
    add("derived_sum.json", direct_sum(fq, fq, EX));

    auto bch = quantum_bch_euclidean(2, 4, 3, EX);
    auto P = bch_puncture_code(2, 4, 3);
    auto w7 = find_weight_word(P, 7);
    if (!w7) {
        std::cerr << "no weight-7 word found\n";
        return 2;
    }
    add("derived_punctured_7.json", puncture_to(bch.carrier, *w7, EX, bch.d_claimed));

    std::ofstream mf(dir + "/manifest.json");
    mf << manifest.dump(2) << "\n";
    std::cout << manifest.size() << " corpus entries written to " << dir << "\n";
    return 0;
}
