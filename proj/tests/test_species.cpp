#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rydline/constants.hpp"
#include "rydline/species.hpp"

#include <filesystem>
#include <fstream>
#include <string>

using namespace rydline;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& text) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

} // namespace

TEST_CASE("species JSON round trip") {
    const auto path = write_temp("spc_rt.json", R"({
        "name": "Rb",
        "polarizability_au": 319.2,
        "mass_amu": 86.909,
        "quantum_defects": [3.1311, 2.6548, 1.3481],
        "phase_shifts": {"3": {"model": "born"}}
    })");
    const SpeciesData s = load_species(path.string());
    CHECK(s.name == "Rb");
    CHECK(s.polarizability == doctest::Approx(319.2));
    CHECK(s.mass_amu == doctest::Approx(86.909));
    CHECK(s.quantum_defect(1) == doctest::Approx(2.6548));
    CHECK(s.quantum_defect(10) == 0.0);
    CHECK(s.phase_shift_sources.at(3).kind == PhaseShiftSource::Kind::Born);

    const auto path2 = write_temp("spc_rt2.json", serialize_species(s));
    const SpeciesData s2 = load_species(path2.string());
    CHECK(s2.polarizability == s.polarizability);
    CHECK(s2.quantum_defects == s.quantum_defects);
}

TEST_CASE("reduced mass is the homonuclear half mass") {
    SpeciesData s;
    s.mass_amu = 86.909;
    CHECK(s.atomic_mass() ==
          doctest::Approx(86.909 * constants::amu_to_electron_mass).epsilon(1e-12));
    CHECK(s.reduced_mass() == doctest::Approx(s.atomic_mass() / 2.0).epsilon(1e-12));
    CHECK(s.reduced_mass() == doctest::Approx(79212.7).epsilon(1e-4));
}

TEST_CASE("missing or malformed species files throw") {
    CHECK_THROWS(load_species("/nonexistent/species.json"));
    const auto bad = write_temp("spc_bad.json", "{\"name\": \"X\"");
    CHECK_THROWS(load_species(bad.string()));
    const auto nomass = write_temp("spc_nomass.json",
                                   R"({"name":"X","polarizability_au":1.0})");
    CHECK_THROWS(load_species(nomass.string()));
}

TEST_CASE("phase table parsing validates its input") {
    const auto good = write_temp("tbl_good.csv",
                                 "k,delta\n0.01,1e-4\n0.02,4e-4\n0.03,9e-4\n0.04,1.6e-3\n");
    const PhaseShiftTable t = load_phase_table(good.string(), 2);
    CHECK(t.L == 2);
    CHECK(t.k.size() == 4);
    CHECK(t.delta[2] == doctest::Approx(9e-4));

    const auto few = write_temp("tbl_few.csv", "k,delta\n0.01,1e-4\n0.02,4e-4\n");
    CHECK_THROWS(load_phase_table(few.string(), 2));
    const auto dec = write_temp("tbl_dec.csv",
                                "k,delta\n0.02,1e-4\n0.01,4e-4\n0.03,1e-4\n0.04,1e-4\n");
    CHECK_THROWS(load_phase_table(dec.string(), 2));
    const auto nan = write_temp("tbl_nan.csv",
                                "k,delta\n0.01,1e-4\n0.02,nan\n0.03,1e-4\n0.04,1e-4\n");
    CHECK_THROWS(load_phase_table(nan.string(), 2));
}

TEST_CASE("relative table paths resolve against the config directory") {
    const fs::path dir = fs::temp_directory_path() / "spc_dir";
    fs::create_directories(dir);
    std::ofstream(dir / "shift.csv")
        << "k,delta\n0.01,1e-4\n0.02,4e-4\n0.03,9e-4\n0.04,1.6e-3\n";
    std::ofstream(dir / "spc.json") << R"({
        "name": "X", "polarizability_au": 100.0, "mass_amu": 10.0,
        "quantum_defects": [],
        "phase_shifts": {"2": {"model": "table", "path": "shift.csv"}}
    })";
    const SpeciesData s = load_species((dir / "spc.json").string());
    const auto& src = s.phase_shift_sources.at(2);
    CHECK(src.kind == PhaseShiftSource::Kind::Table);
    CHECK(fs::exists(src.table_path));
}

TEST_CASE("bundled species configs load") {
    const fs::path data = fs::path(__FILE__).parent_path().parent_path() / "data";
    for (const char* name : {"rb.json", "li.json", "na.json", "k.json"}) {
        const SpeciesData s = load_species((data / name).string());
        CHECK(s.polarizability > 0.0);
        CHECK(s.mass_amu > 0.0);
        CHECK_FALSE(s.quantum_defects.empty());
    }
}
