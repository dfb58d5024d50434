#pragma once

#include "pairinfo/bitstream.hpp"
#include "pairinfo/codec.hpp"
#include "pairinfo/errors.hpp"
#include "pairinfo/info.hpp"
#include "pairinfo/kproxy.hpp"
#include "pairinfo/nat.hpp"
#include "pairinfo/pairing.hpp"
#include "pairinfo/parse.hpp"
#include "pairinfo/poly.hpp"
#include "pairinfo/ray.hpp"
#include "pairinfo/refute.hpp"
#include "pairinfo/report_io.hpp"
#include "pairinfo/scan.hpp"
