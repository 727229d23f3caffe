#pragma once

#include "qsl/dynamics.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qsl {

// Qubit models with closed-form trajectories. Basis convention: sigma_z =
// diag(1, -1), |0> has Bloch vector (0, 0, 1), sigma_minus = |0><1|.

// L = sigma_minus at rate gamma from |1><1|; a Bures geodesic.
LindbladModel amplitude_damping(double gamma);
// L = sigma_z at rate gamma from |+><+|; coherence decays as exp(-2 gamma t).
LindbladModel pure_dephasing(double gamma);
// H = (omega / 2) sigma_z from |+><+|; constant speed omega / 2.
LindbladModel precession(double omega);
// Precession plus dephasing: Bloch vector exp(-2 gamma t)(cos wt, sin wt, 0).
// Not a geodesic for omega > 0; its asymptote 1/2 is only reached as t -> inf.
LindbladModel spiral(double gamma, double omega);

struct CatalogEntry {
    std::string name;
    std::string parameters;
    std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();
bool is_catalog_name(std::string_view name);

// Builds a catalog model by name; unused parameters are ignored.
LindbladModel make_catalog_model(std::string_view name, double gamma, double omega);

// Every catalog model at the given parameters.
std::vector<LindbladModel> catalog(double gamma = 1.0, double omega = 1.0);

}  // namespace qsl
