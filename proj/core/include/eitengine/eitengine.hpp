#pragma once

#include "eitengine/brightness.hpp"
#include "eitengine/constants.hpp"
#include "eitengine/errors.hpp"
#include "eitengine/params.hpp"
#include "eitengine/rates.hpp"
#include "eitengine/spectra.hpp"
#include "eitengine/steady_state.hpp"
#include "eitengine/thermo.hpp"
#include "eitengine/transfer.hpp"
#include "eitengine/verify.hpp"
