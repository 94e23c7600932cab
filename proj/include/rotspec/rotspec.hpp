// rotspec.hpp — umbrella header.

#pragma once

#include "rotspec/cycles.hpp"
#include "rotspec/entropy.hpp"
#include "rotspec/gallery.hpp"
#include "rotspec/graph.hpp"
#include "rotspec/hull.hpp"
#include "rotspec/localized.hpp"
#include "rotspec/measure.hpp"
#include "rotspec/parse.hpp"
#include "rotspec/perron.hpp"
#include "rotspec/potential.hpp"
#include "rotspec/pressure.hpp"
#include "rotspec/recode.hpp"
#include "rotspec/report.hpp"
#include "rotspec/rotation.hpp"
#include "rotspec/simplex.hpp"
#include "rotspec/sofic.hpp"
#include "rotspec/spectrum.hpp"
