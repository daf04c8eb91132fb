// Copyright 2026 The phimat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Builds the Fano plane, passes it through the matroid to φ-system
// correspondence and inspects the searched non-maximal system.

#include <iostream>

#include "phimat/phimat.hpp"

int main() {
  using namespace phimat;

  const Matroid m = fano();
  std::cout << "Fano: rank " << m.rank(m.ground().full()) << ", " << m.flats().size()
            << " flats, " << m.bases().size() << " bases\n";

  const auto forward = matroid_to_whitehead(m);
  std::cout << "matroid -> phi-system: " << (forward.report.passed() ? "pass" : "FAIL") << "\n";

  const PhiSystem& sys = forward.system;
  const Subset pair = Subset::parse(sys.ground(), "1 2");
  std::cout << "cm(" << pair.to_string() << ") = " << common_region(sys, pair).to_string()
            << ", dimension " << dimension(sys, pair) << "\n";

  std::cout << "roundtrip: " << (roundtrip_matroid(m).passed() ? "identity" : "differs") << "\n";

  const auto found = find_non_maximal_example();
  const auto maximal = is_phi_maximal(found.system, Subset::full(found.system.ground()));
  std::cout << "non-maximal system on " << found.ground_size << " elements:\n"
            << emit(found.system) << "E phi-maximal: " << (maximal.holds ? "yes" : "no")
            << ", witness " << found.witness.to_string() << "\n";

  try {
    whitehead_to_matroid(found.system);
  } catch (const CorrespondenceError& e) {
    std::cout << "phi-system -> matroid refused: " << e.what() << "\n";
  }
  return 0;
}
