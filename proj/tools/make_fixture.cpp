// Writes the smooth compactly supported forcing used by the tests as a
// VFGRID file.  The defaults reproduce tests/fixtures/bump.vfgrid.

#include <CLI11.hpp>

#include <iostream>

#include "vsheet/field.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate a bump forcing field in VFGRID format"};
  vsheet::GridSpec grid{32, 32, 65, 8.0, 8.0, 1.0};
  vsheet::BumpSpec bump;
  bump.y_plus = 0.0;
  bump.y_minus = 0.0;
  bump.r_x2 = 0.25;
  std::string out;

  app.add_option("--out", out, "Output path")->required();
  app.add_option("--n-t", grid.n_t)->capture_default_str();
  app.add_option("--n-x1", grid.n_x1)->capture_default_str();
  app.add_option("--n-x2", grid.n_x2)->capture_default_str();
  app.add_option("--L-t", grid.L_t)->capture_default_str();
  app.add_option("--L-x1", grid.L_x1)->capture_default_str();
  app.add_option("--L-x2", grid.L_x2)->capture_default_str();
  app.add_option("--r-x2", bump.r_x2, "x2 radius as a fraction of L_x2")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    vsheet::write_vfgrid(out, vsheet::bump_field(grid, bump));
  } catch (const vsheet::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const vsheet::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
