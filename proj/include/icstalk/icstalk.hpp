#pragma once

#include "icstalk/fano.hpp"
#include "icstalk/ic_engine.hpp"
#include "icstalk/laurent.hpp"
#include "icstalk/partition.hpp"
#include "icstalk/qseries.hpp"
#include "icstalk/springer_typec.hpp"
