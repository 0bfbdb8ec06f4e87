#include "eqanis/trace.hpp"

#include <cstdio>
#include <ostream>

namespace eqanis {

void MomentTrace::write_csv(std::ostream& os) const {
  os << "t,m_x,m_y,m_z\n";
  char line[160];
  for (size_t j = 0; j < samples.size(); ++j) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n", j * dt,
                  samples[j].x, samples[j].y, samples[j].z);
    os << line;
  }
}

}  // namespace eqanis
