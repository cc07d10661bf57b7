// Command-line front end: generation, decomposition, isomorphism testing,
// endomorphism reports, Tits form queries, matrix-pair classification,
// diagram reconstruction, and a built-in self check.
//
// Exit codes: 0 success, 1 usage, 2 parse/validation, 3 oracle budget
// exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qrep/io.hpp"
#include "qrep/prng.hpp"

using namespace qrep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitUnknown = 3;

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << text;
}

Presentation load_presentation(const std::string& path) {
    try {
        return read_repfile(slurp(path));
    } catch (const DataError&) {
        throw;
    } catch (const std::exception& e) {
        throw DataError("bad representation file '" + path + "': " + e.what());
    }
}

Descriptor descriptor_from_args(const FieldSpec& field, const std::string& type_name, int n,
                                const std::string& poly_text, int s,
                                const std::string& variant_name) {
    DType t = parse_dtype(type_name);
    Variant var = parse_variant(variant_name);
    Descriptor d;
    if (t == DType::T0) {
        if (poly_text.empty()) throw DataError("type 0 needs --poly");
        Poly p = parse_poly(poly_text, field).monic();
        d = Descriptor::t0(p, s, field.is_prime_field());
    } else {
        d = Descriptor::plain(t, n, var);
    }
    validate_descriptor(d, field);
    return d;
}

std::string grid_text(const Presentation& v) {
    DimVector d = v.dims();
    std::ostringstream os;
    for (int i = 0; i < d[0] + d[1]; ++i) {
        bool top = i < d[0];
        int r = top ? i : i - d[0];
        for (int j = 0; j < d[2]; ++j)
            os << (j ? " " : "") << (top ? v.A.at(r, j) : v.B.at(r, j)).to_string();
        os << (d[2] ? " | " : "| ");
        for (int j = 0; j < d[3]; ++j)
            os << (top ? v.G.at(r, j) : v.D.at(r, j)).to_string() << (j + 1 < d[3] ? " " : "");
        os << "\n";
        if (i + 1 == d[0] && d[1] > 0) {
            for (int j = 0; j < 2 * (d[2] + d[3]) + 1; ++j) os << "-";
            os << "\n";
        }
    }
    return os.str();
}

void print_decomposition_table(const Decomposition& dec) {
    std::cout << "# dims " << dec.total.to_string() << ", "
              << (dec.exact ? "primary level" : "invariant-factor level") << "\n";
    std::cout << "# type  n  variant    count  extra\n";
    for (const DecompPart& p : dec.parts) {
        std::ostringstream extra;
        if (p.desc.type == DType::T0)
            extra << "p=" << p.desc.p.to_string() << " s=" << p.desc.s;
        std::ostringstream line;
        line << "# " << dtype_name(p.desc.type);
        while (line.str().size() < 8) line << ' ';
        line << p.desc.n << "  " << variant_name(p.desc.variant);
        while (line.str().size() < 23) line << ' ';
        line << p.count << "      " << extra.str();
        std::cout << line.str() << "\n";
    }
}

// ------------------------------------------------------------- selfcheck

int run_selfcheck(int max_n, const std::vector<long long>& primes) {
    int failures = 0, checks = 0;
    auto report = [&](const std::string& name, bool ok) {
        ++checks;
        if (!ok) ++failures;
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    };

    for (long long pf : primes) {
        FieldSpec f = FieldSpec::gf(pf);
        std::vector<Descriptor> entries;
        for (int deg = 1; deg <= 2; ++deg)
            for (const Poly& p : enumerate_irreducibles(f, deg, true))
                for (int s = 1; s * deg <= std::min(max_n, 3); ++s)
                    entries.push_back(Descriptor::t0(p, s));
        for (DType t :
             {DType::TI, DType::TII, DType::TIII, DType::TIIIs, DType::TIV, DType::TIVs})
            for (int n = (t == DType::TI ? 1 : 0); n <= max_n; ++n)
                for (Variant var : variants_of(t)) entries.push_back(Descriptor::plain(t, n, var));

        bool round = true, tits = true, endo = true;
        for (const Descriptor& d : entries) {
            Presentation v = generate(d, f);
            Decomposition dec = decompose(v);
            round &= dec.parts.size() == 1 && dec.parts[0].count == 1 &&
                     descriptor_eq(dec.parts[0].desc, d);
            long long q = tits_q(dim_of(d));
            bool regular = d.type == DType::T0 || d.type == DType::TI;
            tits &= q == (regular ? 0 : 1);
            endo &= static_cast<int>(hom_space(v, v).size()) ==
                    endo_ring_of(d, f).dimension(f);
        }
        std::string tag = " over " + f.to_string();
        report("catalogue round trip" + tag, round);
        report("tits values" + tag, tits);
        report("endomorphism dimensions" + tag, endo);

        Prng rng(0xabcdef + static_cast<std::uint64_t>(pf));
        bool stress = true;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Descriptor> multiset;
            DimVector total{0, 0, 0, 0};
            for (int i = 0; i < 3; ++i) {
                const Descriptor& d = entries[rng.below(entries.size())];
                if ((total + dim_of(d)).total() > 24) break;
                total = total + dim_of(d);
                multiset.push_back(d);
            }
            std::sort(multiset.begin(), multiset.end(), descriptor_less);
            Presentation v = assemble(multiset, f);
            Presentation w = random_admissible_shuffle(v, rng.next(), 100);
            auto got = decompose(w).expanded();
            bool same = got.size() == multiset.size();
            for (size_t i = 0; same && i < got.size(); ++i)
                same = descriptor_eq(got[i], multiset[i]);
            stress &= same;
        }
        report("shuffled multiset round trip" + tag, stress);
    }

    // diagram reconstruction against the worked example
    FieldSpec g2 = FieldSpec::gf(2);
    Presentation ex = from_graphical({DType::TII, 2, {}}, g2);
    bool exact = ex.A == Mat::identity(g2, 3) &&
                 ex.G == Mat::from_ints(g2, {{0, 1}, {1, 0}, {0, 0}}) &&
                 ex.B == Mat::from_ints(g2, {{0, 0, 1}, {0, 1, 0}}) &&
                 ex.D == Mat::identity(g2, 2);
    report("diagram reconstruction worked example", exact);

    std::cout << (failures == 0 ? "PASS" : "FAIL") << " " << (checks - failures) << "/" << checks
              << " self checks\n";
    return failures == 0 ? kExitOk : kExitData;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification toolkit for four-subspace quiver presentations"};
    app.require_subcommand(1);

    // ---- gen
    auto* gen = app.add_subcommand("gen", "write the canonical presentation of a type");
    std::string g_type, g_poly, g_variant = "e", g_field = "gf:2", g_out;
    int g_n = 0, g_s = 1;
    gen->add_option("--type", g_type, "0, I, II, III, III*, IV, IV*")->required();
    gen->add_option("--n", g_n, "size parameter");
    gen->add_option("--poly", g_poly, "type 0: coefficients of p, low degree first");
    gen->add_option("--s", g_s, "type 0: power of p");
    gen->add_option("--variant", g_variant, "orientation: e, swap12, swap34, swap1234");
    gen->add_option("--field", g_field, "gf:p or q");
    gen->add_option("--out,-o", g_out, "output file (default stdout)");

    // ---- decompose
    auto* dec = app.add_subcommand("decompose", "split a presentation into indecomposables");
    std::string d_in;
    bool d_witness = false;
    dec->add_option("input", d_in, "representation file")->required();
    dec->add_flag("--witness", d_witness, "also emit the transformation witness");

    // ---- iso
    auto* iso = app.add_subcommand("iso", "test two presentations for isomorphism");
    std::string i_a, i_b;
    iso->add_option("a", i_a)->required();
    iso->add_option("b", i_b)->required();

    // ---- endo
    auto* endo = app.add_subcommand("endo", "endomorphism space of a presentation");
    std::string e_in;
    endo->add_option("input", e_in)->required();

    // ---- tits
    auto* tits = app.add_subcommand("tits", "Tits form of a dimension vector");
    std::vector<int> t_dims;
    tits->add_option("dims", t_dims, "d1 d2 d3 d4")->expected(4);

    // ---- kronecker
    auto* kron = app.add_subcommand("kronecker", "classify a pair of matrices");
    std::string k_a, k_b, k_field = "gf:2";
    bool k_contra = false;
    kron->add_option("a", k_a, "first matrix file")->required();
    kron->add_option("b", k_b, "second matrix file")->required();
    kron->add_option("--field", k_field, "gf:p");
    kron->add_flag("--contragredient", k_contra, "opposite-direction pair");

    // ---- invariant
    auto* inv = app.add_subcommand("invariant", "rebuild a presentation from its diagram");
    std::string v_type, v_field = "gf:2", v_out;
    int v_n = 1;
    inv->add_option("--type", v_type, "I, II, III, III*, IV, IV*")->required();
    inv->add_option("--n", v_n, "size parameter (>= 1)")->required();
    inv->add_option("--field", v_field, "gf:p or q");
    inv->add_option("--out,-o", v_out, "also write a representation file");

    // ---- oracle
    auto* ora = app.add_subcommand("oracle", "brute-force indecomposability check");
    std::string o_in;
    long long o_budget = 1 << 14;
    ora->add_option("input", o_in)->required();
    ora->add_option("--budget", o_budget, "max endomorphisms to enumerate");

    // ---- selfcheck
    auto* self = app.add_subcommand("selfcheck", "run the built-in verification suites");
    int s_max_n = 3;
    std::string s_fields = "2,3";
    self->add_option("--max-n", s_max_n, "largest size parameter");
    self->add_option("--fields", s_fields, "comma-separated primes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) {
            FieldSpec f = parse_field(g_field);
            Descriptor d = descriptor_from_args(f, g_type, g_n, g_poly, g_s, g_variant);
            Presentation v = generate(d, f);
            spill(g_out, write_repfile(v));
            std::cerr << "dims " << v.dims().to_string() << " q=" << tits_q(v.dims()) << "\n";
            return kExitOk;
        }
        if (*dec) {
            Presentation v = load_presentation(d_in);
            Decomposition result = decompose(v, d_witness);
            std::cout << decomposition_json(result);
            print_decomposition_table(result);
            if (d_witness && result.witness) {
                std::cout << "# row witness (first stripe)\n"
                          << write_matrix_json(result.witness->P1);
                std::cout << "# row witness (second stripe)\n"
                          << write_matrix_json(result.witness->P2);
                std::cout << "# column witness (third stripe)\n"
                          << write_matrix_json(result.witness->Q3);
                std::cout << "# column witness (fourth stripe)\n"
                          << write_matrix_json(result.witness->Q4);
            }
            return kExitOk;
        }
        if (*iso) {
            Presentation a = load_presentation(i_a);
            Presentation b = load_presentation(i_b);
            bool same = is_isomorphic(a, b);
            std::cout << (same ? "isomorphic" : "not isomorphic") << "\n";
            return kExitOk;
        }
        if (*endo) {
            Presentation v = load_presentation(e_in);
            auto basis = hom_space(v, v);
            std::cout << "dim End = " << basis.size() << "\n";
            Decomposition result = decompose(v, false);
            if (result.parts.size() == 1 && result.parts[0].count == 1) {
                auto ring = endo_ring_of(result.parts[0].desc, v.field);
                std::cout << "indecomposable of " << result.parts[0].desc.to_string() << "\n";
                std::cout << "End = " << ring.to_string() << "\n";
            } else {
                std::cout << "decomposes into " << result.expanded().size() << " summands\n";
            }
            return kExitOk;
        }
        if (*tits) {
            DimVector d{t_dims[0], t_dims[1], t_dims[2], t_dims[3]};
            std::cout << "q=" << tits_q(d);
            switch (root_class(d)) {
                case RootClass::real: std::cout << " real root\n"; break;
                case RootClass::imaginary: std::cout << " imaginary root\n"; break;
                case RootClass::none: std::cout << " not a root\n"; break;
            }
            return kExitOk;
        }
        if (*kron) {
            FieldSpec f = parse_field(k_field);
            Mat a = read_matrix_json(slurp(k_a), f);
            Mat b = read_matrix_json(slurp(k_b), f);
            if (k_contra) {
                auto blocks = contragredient_decompose(ContraPair(a, b));
                for (const auto& blk : blocks) std::cout << contra_block_name(blk) << "\n";
            } else {
                auto blocks = kronecker_decompose(Pencil(a, b));
                for (const auto& blk : blocks) std::cout << pencil_block_name(blk) << "\n";
            }
            return kExitOk;
        }
        if (*inv) {
            FieldSpec f = parse_field(v_field);
            DType t = parse_dtype(v_type);
            Presentation v = from_graphical({t, v_n, {}}, f);
            std::cout << grid_text(v);
            if (!v_out.empty()) spill(v_out, write_repfile(v));
            return kExitOk;
        }
        if (*ora) {
            Presentation v = load_presentation(o_in);
            switch (indecomposable_oracle(v, o_budget)) {
                case OracleVerdict::yes: std::cout << "indecomposable\n"; return kExitOk;
                case OracleVerdict::no: std::cout << "decomposable\n"; return kExitOk;
                case OracleVerdict::unknown:
                    std::cout << "unknown (budget exceeded)\n";
                    return kExitUnknown;
            }
        }
        if (*self) {
            std::vector<long long> primes;
            std::stringstream ss(s_fields);
            std::string item;
            while (std::getline(ss, item, ',')) primes.push_back(std::stoll(item));
            return run_selfcheck(s_max_n, primes);
        }
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
