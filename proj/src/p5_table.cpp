// Coefficient table of the degree-40 polynomial P5 in (x, y, z, t); every
// exponent is even. Generated from a transcription of the published
// expansion, one row per monomial: exponents of x, y, z, t, then coefficient.

#include "nphmm/hd_assumption.hpp"

namespace nphmm {

namespace {

constexpr P5Term kTerms[] = {
    {0, 0, 0, 0, 144},
    {0, 0, 0, 2, 192},
    {0, 0, 0, 4, 128},
    {0, 0, 0, 6, 256},
    {0, 0, 0, 8, 176},
    {0, 0, 2, 0, 192},
    {0, 0, 2, 2, 416},
    {0, 0, 2, 4, 288},
    {0, 0, 2, 6, 320},
    {0, 0, 2, 8, 256},
    {0, 0, 4, 0, 128},
    {0, 0, 4, 2, 288},
    {0, 0, 4, 4, 352},
    {0, 0, 4, 6, 384},
    {0, 0, 4, 8, 256},
    {0, 0, 6, 0, 256},
    {0, 0, 6, 2, 320},
    {0, 0, 6, 4, 384},
    {0, 0, 6, 6, 352},
    {0, 0, 6, 8, 160},
    {0, 0, 8, 0, 176},
    {0, 0, 8, 2, 256},
    {0, 0, 8, 4, 256},
    {0, 0, 8, 6, 160},
    {0, 0, 8, 8, 48},
    {0, 2, 0, 0, 144},
    {0, 2, 0, 2, 480},
    {0, 2, 0, 4, 784},
    {0, 2, 0, 6, 704},
    {0, 2, 0, 8, 256},
    {0, 2, 2, 0, 480},
    {0, 2, 2, 2, 1312},
    {0, 2, 2, 4, 1888},
    {0, 2, 2, 6, 1760},
    {0, 2, 2, 8, 704},
    {0, 2, 4, 0, 784},
    {0, 2, 4, 2, 1888},
    {0, 2, 4, 4, 2208},
    {0, 2, 4, 6, 1888},
    {0, 2, 4, 8, 784},
    {0, 2, 6, 0, 704},
    {0, 2, 6, 2, 1760},
    {0, 2, 6, 4, 1888},
    {0, 2, 6, 6, 1312},
    {0, 2, 6, 8, 480},
    {0, 2, 8, 0, 256},
    {0, 2, 8, 2, 704},
    {0, 2, 8, 4, 784},
    {0, 2, 8, 6, 480},
    {0, 2, 8, 8, 144},
    {0, 4, 0, 0, 144},
    {0, 4, 0, 2, 480},
    {0, 4, 0, 4, 624},
    {0, 4, 0, 6, 384},
    {0, 4, 0, 8, 96},
    {0, 4, 2, 0, 480},
    {0, 4, 2, 2, 1632},
    {0, 4, 2, 4, 2208},
    {0, 4, 2, 6, 1440},
    {0, 4, 2, 8, 384},
    {0, 4, 4, 0, 624},
    {0, 4, 4, 2, 2208},
    {0, 4, 4, 4, 3168},
    {0, 4, 4, 6, 2208},
    {0, 4, 4, 8, 624},
    {0, 4, 6, 0, 384},
    {0, 4, 6, 2, 1440},
    {0, 4, 6, 4, 2208},
    {0, 4, 6, 6, 1632},
    {0, 4, 6, 8, 480},
    {0, 4, 8, 0, 96},
    {0, 4, 8, 2, 384},
    {0, 4, 8, 4, 624},
    {0, 4, 8, 6, 480},
    {0, 4, 8, 8, 144},
    {2, 0, 0, 0, 576},
    {2, 0, 0, 2, 624},
    {2, 0, 0, 4, 672},
    {2, 0, 0, 6, 1776},
    {2, 0, 0, 8, 1152},
    {2, 0, 2, 0, 912},
    {2, 0, 2, 2, 1664},
    {2, 0, 2, 4, 1248},
    {2, 0, 2, 6, 2304},
    {2, 0, 2, 8, 1808},
    {2, 0, 4, 0, 352},
    {2, 0, 4, 2, 1056},
    {2, 0, 4, 4, 1408},
    {2, 0, 4, 6, 1952},
    {2, 0, 4, 8, 1504},
    {2, 0, 6, 0, 272},
    {2, 0, 6, 2, 256},
    {2, 0, 6, 4, 1120},
    {2, 0, 6, 6, 1408},
    {2, 0, 6, 8, 784},
    {2, 0, 8, 0, 256},
    {2, 0, 8, 2, 240},
    {2, 0, 8, 4, 544},
    {2, 0, 8, 6, 496},
    {2, 0, 8, 8, 192},
    {2, 2, 0, 0, 576},
    {2, 2, 0, 2, 2064},
    {2, 2, 0, 4, 4192},
    {2, 2, 0, 6, 4496},
    {2, 2, 0, 8, 1792},
    {2, 2, 2, 0, 1776},
    {2, 2, 2, 2, 5248},
    {2, 2, 2, 4, 9504},
    {2, 2, 2, 6, 10624},
    {2, 2, 2, 8, 4592},
    {2, 2, 4, 0, 2080},
    {2, 2, 4, 2, 5600},
    {2, 2, 4, 4, 8832},
    {2, 2, 4, 6, 9952},
    {2, 2, 4, 8, 4640},
    {2, 2, 6, 0, 1136},
    {2, 2, 6, 2, 3456},
    {2, 2, 6, 4, 5152},
    {2, 2, 6, 6, 5248},
    {2, 2, 6, 8, 2416},
    {2, 2, 8, 0, 256},
    {2, 2, 8, 2, 1040},
    {2, 2, 8, 4, 1632},
    {2, 2, 8, 6, 1424},
    {2, 2, 8, 8, 576},
    {2, 4, 0, 0, 576},
    {2, 4, 0, 2, 2208},
    {2, 4, 0, 4, 3392},
    {2, 4, 0, 6, 2464},
    {2, 4, 0, 8, 704},
    {2, 4, 2, 0, 1632},
    {2, 4, 2, 2, 6528},
    {2, 4, 2, 4, 10688},
    {2, 4, 2, 6, 8320},
    {2, 4, 2, 8, 2528},
    {2, 4, 4, 0, 1600},
    {2, 4, 4, 2, 6976},
    {2, 4, 4, 4, 12672},
    {2, 4, 4, 6, 10816},
    {2, 4, 4, 8, 3520},
    {2, 4, 6, 0, 608},
    {2, 4, 6, 2, 3200},
    {2, 4, 6, 4, 6848},
    {2, 4, 6, 6, 6528},
    {2, 4, 6, 8, 2272},
    {2, 4, 8, 0, 64},
    {2, 4, 8, 2, 544},
    {2, 4, 8, 4, 1472},
    {2, 4, 8, 6, 1568},
    {2, 4, 8, 8, 576},
    {4, 0, 0, 0, 972},
    {4, 0, 0, 2, 720},
    {4, 0, 0, 4, 1884},
    {4, 0, 0, 6, 5496},
    {4, 0, 0, 8, 3360},
    {4, 0, 2, 0, 1728},
    {4, 0, 2, 2, 2520},
    {4, 0, 2, 4, 2776},
    {4, 0, 2, 6, 7624},
    {4, 0, 2, 8, 5640},
    {4, 0, 4, 0, 764},
    {4, 0, 4, 2, 2104},
    {4, 0, 4, 4, 2616},
    {4, 0, 4, 6, 5016},
    {4, 0, 4, 8, 4252},
    {4, 0, 6, 0, 232},
    {4, 0, 6, 2, 456},
    {4, 0, 6, 4, 2104},
    {4, 0, 6, 6, 2712},
    {4, 0, 6, 8, 1856},
    {4, 0, 8, 0, 224},
    {4, 0, 8, 2, 152},
    {4, 0, 8, 4, 892},
    {4, 0, 8, 6, 848},
    {4, 0, 8, 8, 396},
    {4, 2, 0, 0, 1080},
    {4, 2, 0, 2, 4104},
    {4, 2, 0, 4, 10760},
    {4, 2, 0, 6, 13528},
    {4, 2, 0, 8, 5792},
    {4, 2, 2, 0, 3096},
    {4, 2, 2, 2, 9904},
    {4, 2, 2, 4, 23104},
    {4, 2, 2, 6, 30288},
    {4, 2, 2, 8, 13992},
    {4, 2, 4, 0, 3368},
    {4, 2, 4, 2, 9440},
    {4, 2, 4, 4, 18928},
    {4, 2, 4, 6, 25952},
    {4, 2, 4, 8, 13224},
    {4, 2, 6, 0, 1768},
    {4, 2, 6, 2, 5200},
    {4, 2, 6, 4, 9152},
    {4, 2, 6, 6, 11696},
    {4, 2, 6, 8, 6232},
    {4, 2, 8, 0, 416},
    {4, 2, 8, 2, 1560},
    {4, 2, 8, 4, 2696},
    {4, 2, 8, 6, 2760},
    {4, 2, 8, 8, 1336},
    {4, 4, 0, 0, 1188},
    {4, 4, 0, 2, 5256},
    {4, 4, 0, 4, 9636},
    {4, 4, 0, 6, 8256},
    {4, 4, 0, 8, 2688},
    {4, 4, 2, 0, 3240},
    {4, 4, 2, 2, 14280},
    {4, 4, 2, 4, 27448},
    {4, 4, 2, 6, 25048},
    {4, 4, 2, 8, 8640},
    {4, 4, 4, 0, 3364},
    {4, 4, 4, 2, 14456},
    {4, 4, 4, 4, 29416},
    {4, 4, 4, 6, 29016},
    {4, 4, 4, 8, 10692},
    {4, 4, 6, 0, 1760},
    {4, 4, 6, 2, 7128},
    {4, 4, 6, 4, 15128},
    {4, 4, 6, 6, 16008},
    {4, 4, 6, 8, 6248},
    {4, 4, 8, 0, 448},
    {4, 4, 8, 2, 1696},
    {4, 4, 8, 4, 3524},
    {4, 4, 8, 6, 3784},
    {4, 4, 8, 8, 1508},
    {4, 6, 0, 0, 216},
    {4, 6, 0, 2, 720},
    {4, 6, 0, 4, 952},
    {4, 6, 0, 6, 608},
    {4, 6, 0, 8, 160},
    {4, 6, 2, 0, 720},
    {4, 6, 2, 2, 2480},
    {4, 6, 2, 4, 3472},
    {4, 6, 2, 6, 2384},
    {4, 6, 2, 8, 672},
    {4, 6, 4, 0, 952},
    {4, 6, 4, 2, 3472},
    {4, 6, 4, 4, 5232},
    {4, 6, 4, 6, 3856},
    {4, 6, 4, 8, 1144},
    {4, 6, 6, 0, 608},
    {4, 6, 6, 2, 2384},
    {4, 6, 6, 4, 3856},
    {4, 6, 6, 6, 2992},
    {4, 6, 6, 8, 912},
    {4, 6, 8, 0, 160},
    {4, 6, 8, 2, 672},
    {4, 6, 8, 4, 1144},
    {4, 6, 8, 6, 912},
    {4, 6, 8, 8, 280},
    {6, 0, 0, 0, 900},
    {6, 0, 0, 2, 264},
    {6, 0, 0, 4, 3556},
    {6, 0, 0, 6, 9920},
    {6, 0, 0, 8, 5728},
    {6, 0, 2, 0, 1704},
    {6, 0, 2, 2, 1736},
    {6, 0, 2, 4, 4664},
    {6, 0, 2, 6, 14808},
    {6, 0, 2, 8, 10176},
    {6, 0, 4, 0, 804},
    {6, 0, 4, 2, 1912},
    {6, 0, 4, 4, 2920},
    {6, 0, 4, 6, 8536},
    {6, 0, 4, 8, 7364},
    {6, 0, 6, 0, 96},
    {6, 0, 6, 2, 472},
    {6, 0, 6, 4, 2072},
    {6, 0, 6, 6, 3208},
    {6, 0, 6, 8, 2792},
    {6, 0, 8, 0, 96},
    {6, 0, 8, 2, 32},
    {6, 0, 8, 4, 900},
    {6, 0, 8, 6, 840},
    {6, 0, 8, 8, 516},
    {6, 2, 0, 0, 1224},
    {6, 2, 0, 2, 5016},
    {6, 2, 0, 4, 17592},
    {6, 2, 0, 6, 25032},
    {6, 2, 0, 8, 11232},
    {6, 2, 2, 0, 3144},
    {6, 2, 2, 2, 11344},
    {6, 2, 2, 4, 35712},
    {6, 2, 2, 6, 53424},
    {6, 2, 2, 8, 25912},
    {6, 2, 4, 0, 2840},
    {6, 2, 4, 2, 9056},
    {6, 2, 4, 4, 25872},
    {6, 2, 4, 6, 42464},
    {6, 2, 4, 8, 23192},
    {6, 2, 6, 0, 1144},
    {6, 2, 6, 2, 3760},
    {6, 2, 6, 4, 9984},
    {6, 2, 6, 6, 16720},
    {6, 2, 6, 8, 10120},
    {6, 2, 8, 0, 224},
    {6, 2, 8, 2, 1032},
    {6, 2, 8, 4, 2616},
    {6, 2, 8, 6, 3416},
    {6, 2, 8, 8, 1992},
    {6, 4, 0, 0, 1548},
    {6, 4, 0, 2, 8112},
    {6, 4, 0, 4, 18076},
    {6, 4, 0, 6, 18008},
    {6, 4, 0, 8, 6496},
    {6, 4, 2, 0, 3936},
    {6, 4, 2, 2, 19992},
    {6, 4, 2, 4, 46552},
    {6, 4, 2, 6, 49352},
    {6, 4, 2, 8, 18856},
    {6, 4, 4, 0, 3452},
    {6, 4, 4, 2, 17336},
    {6, 4, 4, 4, 43896},
    {6, 4, 4, 6, 51032},
    {6, 4, 4, 8, 21020},
    {6, 4, 6, 0, 1288},
    {6, 4, 6, 2, 6856},
    {6, 4, 6, 4, 19576},
    {6, 4, 6, 6, 25176},
    {6, 4, 6, 8, 11168},
    {6, 4, 8, 0, 224},
    {6, 4, 8, 2, 1400},
    {6, 4, 8, 4, 4156},
    {6, 4, 8, 6, 5488},
    {6, 4, 8, 8, 2508},
    {6, 6, 0, 0, 648},
    {6, 6, 0, 2, 2592},
    {6, 6, 0, 4, 4168},
    {6, 6, 0, 6, 3152},
    {6, 6, 0, 8, 928},
    {6, 6, 2, 0, 1728},
    {6, 6, 2, 2, 7440},
    {6, 6, 2, 4, 13072},
    {6, 6, 2, 6, 10736},
    {6, 6, 2, 8, 3376},
    {6, 6, 4, 0, 1544},
    {6, 6, 4, 2, 7760},
    {6, 6, 4, 4, 15696},
    {6, 6, 4, 6, 14288},
    {6, 6, 4, 8, 4808},
    {6, 6, 6, 0, 496},
    {6, 6, 6, 2, 3568},
    {6, 6, 6, 4, 8848},
    {6, 6, 6, 6, 8976},
    {6, 6, 6, 8, 3200},
    {6, 6, 8, 0, 32},
    {6, 6, 8, 2, 656},
    {6, 6, 8, 4, 2056},
    {6, 6, 8, 6, 2272},
    {6, 6, 8, 8, 840},
    {8, 0, 0, 0, 495},
    {8, 0, 0, 2, -114},
    {8, 0, 0, 4, 4551},
    {8, 0, 0, 6, 11424},
    {8, 0, 0, 8, 6264},
    {8, 0, 2, 0, 966},
    {8, 0, 2, 2, 494},
    {8, 0, 2, 4, 6098},
    {8, 0, 2, 6, 18218},
    {8, 0, 2, 8, 11648},
    {8, 0, 4, 0, 471},
    {8, 0, 4, 2, 898},
    {8, 0, 4, 4, 2694},
    {8, 0, 4, 6, 10058},
    {8, 0, 4, 8, 8335},
    {8, 0, 6, 0, 24},
    {8, 0, 6, 2, 298},
    {8, 0, 6, 4, 1178},
    {8, 0, 6, 6, 2686},
    {8, 0, 6, 8, 2870},
    {8, 0, 8, 0, 24},
    {8, 0, 8, 2, 8},
    {8, 0, 8, 4, 575},
    {8, 0, 8, 6, 510},
    {8, 0, 8, 8, 463},
    {8, 2, 0, 0, 900},
    {8, 2, 0, 2, 4224},
    {8, 2, 0, 4, 19924},
    {8, 2, 0, 6, 30776},
    {8, 2, 0, 8, 14176},
    {8, 2, 2, 0, 2064},
    {8, 2, 2, 2, 9016},
    {8, 2, 2, 4, 38552},
    {8, 2, 2, 6, 63192},
    {8, 2, 2, 8, 31592},
    {8, 2, 4, 0, 1524},
    {8, 2, 4, 2, 6072},
    {8, 2, 4, 4, 25016},
    {8, 2, 4, 6, 46792},
    {8, 2, 4, 8, 26900},
    {8, 2, 6, 0, 456},
    {8, 2, 6, 2, 1752},
    {8, 2, 6, 4, 7592},
    {8, 2, 6, 6, 16024},
    {8, 2, 6, 8, 10880},
    {8, 2, 8, 0, 96},
    {8, 2, 8, 2, 472},
    {8, 2, 8, 4, 1780},
    {8, 2, 8, 6, 2800},
    {8, 2, 8, 8, 1972},
    {8, 4, 0, 0, 1359},
    {8, 4, 0, 2, 8598},
    {8, 4, 0, 4, 23375},
    {8, 4, 0, 6, 26392},
    {8, 4, 0, 8, 10256},
    {8, 4, 2, 0, 3198},
    {8, 4, 2, 2, 19518},
    {8, 4, 2, 4, 55218},
    {8, 4, 2, 6, 66170},
    {8, 4, 2, 8, 27272},
    {8, 4, 4, 0, 2495},
    {8, 4, 4, 2, 14658},
    {8, 4, 4, 4, 45814},
    {8, 4, 4, 6, 61162},
    {8, 4, 4, 8, 27607},
    {8, 4, 6, 0, 832},
    {8, 4, 6, 2, 4730},
    {8, 4, 6, 4, 17242},
    {8, 4, 6, 6, 26382},
    {8, 4, 6, 8, 13230},
    {8, 4, 8, 0, 176},
    {8, 4, 8, 2, 992},
    {8, 4, 8, 4, 3367},
    {8, 4, 8, 6, 5190},
    {8, 4, 8, 8, 2735},
    {8, 6, 0, 0, 918},
    {8, 6, 0, 2, 4428},
    {8, 6, 0, 4, 8502},
    {8, 6, 0, 6, 7392},
    {8, 6, 0, 8, 2400},
    {8, 6, 2, 0, 2268},
    {8, 6, 2, 2, 11484},
    {8, 6, 2, 4, 23812},
    {8, 6, 2, 6, 22276},
    {8, 6, 2, 8, 7680},
    {8, 6, 4, 0, 1942},
    {8, 6, 4, 2, 10532},
    {8, 6, 4, 4, 24556},
    {8, 6, 4, 6, 25380},
    {8, 6, 4, 8, 9414},
    {8, 6, 6, 0, 752},
    {8, 6, 6, 2, 4356},
    {8, 6, 6, 4, 11780},
    {8, 6, 6, 6, 13596},
    {8, 6, 6, 8, 5420},
    {8, 6, 8, 0, 160},
    {8, 6, 8, 2, 880},
    {8, 6, 8, 4, 2534},
    {8, 6, 8, 6, 3100},
    {8, 6, 8, 8, 1286},
    {8, 8, 0, 0, 108},
    {8, 8, 0, 2, 360},
    {8, 8, 0, 4, 468},
    {8, 8, 0, 6, 288},
    {8, 8, 0, 8, 72},
    {8, 8, 2, 0, 360},
    {8, 8, 2, 2, 1224},
    {8, 8, 2, 4, 1656},
    {8, 8, 2, 6, 1080},
    {8, 8, 2, 8, 288},
    {8, 8, 4, 0, 468},
    {8, 8, 4, 2, 1656},
    {8, 8, 4, 4, 2376},
    {8, 8, 4, 6, 1656},
    {8, 8, 4, 8, 468},
    {8, 8, 6, 0, 288},
    {8, 8, 6, 2, 1080},
    {8, 8, 6, 4, 1656},
    {8, 8, 6, 6, 1224},
    {8, 8, 6, 8, 360},
    {8, 8, 8, 0, 72},
    {8, 8, 8, 2, 288},
    {8, 8, 8, 4, 468},
    {8, 8, 8, 6, 360},
    {8, 8, 8, 8, 108},
    {10, 0, 0, 0, 162},
    {10, 0, 0, 2, -108},
    {10, 0, 0, 4, 3810},
    {10, 0, 0, 6, 8592},
    {10, 0, 0, 8, 4512},
    {10, 0, 2, 0, 324},
    {10, 0, 2, 2, 36},
    {10, 0, 2, 4, 5468},
    {10, 0, 2, 6, 14444},
    {10, 0, 2, 8, 8688},
    {10, 0, 4, 0, 162},
    {10, 0, 4, 2, 252},
    {10, 0, 4, 4, 2164},
    {10, 0, 4, 6, 7980},
    {10, 0, 4, 8, 6226},
    {10, 0, 6, 2, 108},
    {10, 0, 6, 4, 396},
    {10, 0, 6, 6, 1668},
    {10, 0, 6, 8, 2020},
    {10, 0, 8, 4, 210},
    {10, 0, 8, 6, 180},
    {10, 0, 8, 8, 290},
    {10, 2, 0, 0, 432},
    {10, 2, 0, 2, 2520},
    {10, 2, 0, 4, 15584},
    {10, 2, 0, 6, 25336},
    {10, 2, 0, 8, 11840},
    {10, 2, 2, 0, 936},
    {10, 2, 2, 2, 5248},
    {10, 2, 2, 4, 29072},
    {10, 2, 2, 6, 50464},
    {10, 2, 2, 8, 25704},
    {10, 2, 4, 0, 576},
    {10, 2, 4, 2, 3184},
    {10, 2, 4, 4, 17216},
    {10, 2, 4, 6, 35024},
    {10, 2, 4, 8, 20928},
    {10, 2, 6, 0, 72},
    {10, 2, 6, 2, 544},
    {10, 2, 6, 4, 3952},
    {10, 2, 6, 6, 10304},
    {10, 2, 6, 8, 7848},
    {10, 2, 8, 2, 88},
    {10, 2, 8, 4, 736},
    {10, 2, 8, 6, 1432},
    {10, 2, 8, 8, 1296},
    {10, 4, 0, 0, 810},
    {10, 4, 0, 2, 6156},
    {10, 4, 0, 4, 20442},
    {10, 4, 0, 6, 25656},
    {10, 4, 0, 8, 10560},
    {10, 4, 2, 0, 1836},
    {10, 4, 2, 2, 13332},
    {10, 4, 2, 4, 44988},
    {10, 4, 2, 6, 59580},
    {10, 4, 2, 8, 26088},
    {10, 4, 4, 0, 1242},
    {10, 4, 4, 2, 8892},
    {10, 4, 4, 4, 33252},
    {10, 4, 4, 6, 49644},
    {10, 4, 4, 8, 24234},
    {10, 4, 6, 0, 216},
    {10, 4, 6, 2, 1980},
    {10, 4, 6, 4, 10092},
    {10, 4, 6, 6, 18420},
    {10, 4, 6, 8, 10476},
    {10, 4, 8, 2, 264},
    {10, 4, 8, 4, 1578},
    {10, 4, 8, 6, 3084},
    {10, 4, 8, 8, 1962},
    {10, 6, 0, 0, 756},
    {10, 6, 0, 2, 4392},
    {10, 6, 0, 4, 10036},
    {10, 6, 0, 6, 9920},
    {10, 6, 0, 8, 3520},
    {10, 6, 2, 0, 1800},
    {10, 6, 2, 2, 10568},
    {10, 6, 2, 4, 25560},
    {10, 6, 2, 6, 26872},
    {10, 6, 2, 8, 10080},
    {10, 6, 4, 0, 1332},
    {10, 6, 4, 2, 8408},
    {10, 6, 4, 4, 22952},
    {10, 6, 4, 6, 26776},
    {10, 6, 4, 8, 10900},
    {10, 6, 6, 0, 288},
    {10, 6, 6, 2, 2552},
    {10, 6, 6, 4, 8984},
    {10, 6, 6, 6, 12232},
    {10, 6, 6, 8, 5512},
    {10, 6, 8, 2, 320},
    {10, 6, 8, 4, 1556},
    {10, 6, 8, 6, 2408},
    {10, 6, 8, 8, 1172},
    {10, 8, 0, 0, 216},
    {10, 8, 0, 2, 864},
    {10, 8, 0, 4, 1368},
    {10, 8, 0, 6, 1008},
    {10, 8, 0, 8, 288},
    {10, 8, 2, 0, 576},
    {10, 8, 2, 2, 2448},
    {10, 8, 2, 4, 4176},
    {10, 8, 2, 6, 3312},
    {10, 8, 2, 8, 1008},
    {10, 8, 4, 0, 504},
    {10, 8, 4, 2, 2448},
    {10, 8, 4, 4, 4752},
    {10, 8, 4, 6, 4176},
    {10, 8, 4, 8, 1368},
    {10, 8, 6, 0, 144},
    {10, 8, 6, 2, 1008},
    {10, 8, 6, 4, 2448},
    {10, 8, 6, 6, 2448},
    {10, 8, 6, 8, 864},
    {10, 8, 8, 2, 144},
    {10, 8, 8, 4, 504},
    {10, 8, 8, 6, 576},
    {10, 8, 8, 8, 216},
    {12, 0, 0, 0, 27},
    {12, 0, 0, 2, -18},
    {12, 0, 0, 4, 1979},
    {12, 0, 0, 6, 4120},
    {12, 0, 0, 8, 2096},
    {12, 0, 2, 0, 54},
    {12, 0, 2, 2, 6},
    {12, 0, 2, 4, 3002},
    {12, 0, 2, 6, 7186},
    {12, 0, 2, 8, 4136},
    {12, 0, 4, 0, 27},
    {12, 0, 4, 2, 42},
    {12, 0, 4, 4, 1182},
    {12, 0, 4, 6, 4018},
    {12, 0, 4, 8, 2979},
    {12, 0, 6, 2, 18},
    {12, 0, 6, 4, 66},
    {12, 0, 6, 6, 726},
    {12, 0, 6, 8, 934},
    {12, 0, 8, 4, 35},
    {12, 0, 8, 6, 30},
    {12, 0, 8, 8, 123},
    {12, 2, 0, 0, 108},
    {12, 2, 0, 2, 936},
    {12, 2, 0, 4, 7916},
    {12, 2, 0, 6, 13456},
    {12, 2, 0, 8, 6368},
    {12, 2, 2, 0, 216},
    {12, 2, 2, 2, 1872},
    {12, 2, 2, 4, 14192},
    {12, 2, 2, 6, 26056},
    {12, 2, 2, 8, 13520},
    {12, 2, 4, 0, 108},
    {12, 2, 4, 2, 1008},
    {12, 2, 4, 4, 7584},
    {12, 2, 4, 6, 16968},
    {12, 2, 4, 8, 10572},
    {12, 2, 6, 2, 72},
    {12, 2, 6, 4, 1160},
    {12, 2, 6, 6, 4192},
    {12, 2, 6, 8, 3680},
    {12, 2, 8, 4, 140},
    {12, 2, 8, 6, 400},
    {12, 2, 8, 8, 548},
    {12, 4, 0, 0, 243},
    {12, 4, 0, 2, 2574},
    {12, 4, 0, 4, 11299},
    {12, 4, 0, 6, 15848},
    {12, 4, 0, 8, 6880},
    {12, 4, 2, 0, 486},
    {12, 4, 2, 2, 5214},
    {12, 4, 2, 4, 22994},
    {12, 4, 2, 6, 34194},
    {12, 4, 2, 8, 15928},
    {12, 4, 4, 0, 243},
    {12, 4, 4, 2, 2914},
    {12, 4, 4, 4, 14758},
    {12, 4, 4, 6, 25538},
    {12, 4, 4, 8, 13643},
    {12, 4, 6, 2, 274},
    {12, 4, 6, 4, 3186},
    {12, 4, 6, 6, 7806},
    {12, 4, 6, 8, 5278},
    {12, 4, 8, 4, 315},
    {12, 4, 8, 6, 998},
    {12, 4, 8, 8, 875},
    {12, 6, 0, 0, 270},
    {12, 6, 0, 2, 2268},
    {12, 6, 0, 4, 6766},
    {12, 6, 0, 6, 7808},
    {12, 6, 0, 8, 3040},
    {12, 6, 2, 0, 540},
    {12, 6, 2, 2, 4836},
    {12, 6, 2, 4, 15420},
    {12, 6, 2, 6, 18964},
    {12, 6, 2, 8, 7840},
    {12, 6, 4, 0, 270},
    {12, 6, 4, 2, 2972},
    {12, 6, 4, 4, 11492},
    {12, 6, 4, 6, 16244},
    {12, 6, 4, 8, 7486},
    {12, 6, 6, 2, 404},
    {12, 6, 6, 4, 3156},
    {12, 6, 6, 6, 5940},
    {12, 6, 6, 8, 3252},
    {12, 6, 8, 4, 350},
    {12, 6, 8, 6, 916},
    {12, 6, 8, 8, 598},
    {12, 8, 0, 0, 108},
    {12, 8, 0, 2, 648},
    {12, 8, 0, 4, 1404},
    {12, 8, 0, 6, 1296},
    {12, 8, 0, 8, 432},
    {12, 8, 2, 0, 216},
    {12, 8, 2, 2, 1488},
    {12, 8, 2, 4, 3616},
    {12, 8, 2, 6, 3640},
    {12, 8, 2, 8, 1296},
    {12, 8, 4, 0, 108},
    {12, 8, 4, 2, 1024},
    {12, 8, 4, 4, 3136},
    {12, 8, 4, 6, 3656},
    {12, 8, 4, 8, 1436},
    {12, 8, 6, 2, 184},
    {12, 8, 6, 4, 1064},
    {12, 8, 6, 6, 1600},
    {12, 8, 6, 8, 720},
    {12, 8, 8, 4, 140},
    {12, 8, 8, 6, 288},
    {12, 8, 8, 8, 148},
    {14, 0, 0, 4, 576},
    {14, 0, 0, 6, 1152},
    {14, 0, 0, 8, 576},
    {14, 0, 2, 4, 896},
    {14, 0, 2, 6, 2048},
    {14, 0, 2, 8, 1152},
    {14, 0, 4, 4, 352},
    {14, 0, 4, 6, 1152},
    {14, 0, 4, 8, 832},
    {14, 0, 6, 6, 192},
    {14, 0, 6, 8, 256},
    {14, 0, 8, 8, 32},
    {14, 2, 0, 2, 144},
    {14, 2, 0, 4, 2304},
    {14, 2, 0, 6, 4176},
    {14, 2, 0, 8, 2016},
    {14, 2, 2, 2, 264},
    {14, 2, 2, 4, 3896},
    {14, 2, 2, 6, 7808},
    {14, 2, 2, 8, 4176},
    {14, 2, 4, 2, 120},
    {14, 2, 4, 4, 1816},
    {14, 2, 4, 6, 4736},
    {14, 2, 4, 8, 3136},
    {14, 2, 6, 4, 128},
    {14, 2, 6, 6, 952},
    {14, 2, 6, 8, 1016},
    {14, 2, 8, 6, 40},
    {14, 2, 8, 8, 136},
    {14, 4, 0, 2, 432},
    {14, 4, 0, 4, 3456},
    {14, 4, 0, 6, 5616},
    {14, 4, 0, 8, 2592},
    {14, 4, 2, 2, 792},
    {14, 4, 2, 4, 6312},
    {14, 4, 2, 6, 11136},
    {14, 4, 2, 8, 5616},
    {14, 4, 4, 2, 360},
    {14, 4, 4, 4, 3336},
    {14, 4, 4, 6, 7296},
    {14, 4, 4, 8, 4416},
    {14, 4, 6, 4, 384},
    {14, 4, 6, 6, 1704},
    {14, 4, 6, 8, 1512},
    {14, 4, 8, 6, 120},
    {14, 4, 8, 8, 216},
    {14, 6, 0, 2, 432},
    {14, 6, 0, 4, 2304},
    {14, 6, 0, 6, 3312},
    {14, 6, 0, 8, 1440},
    {14, 6, 2, 2, 792},
    {14, 6, 2, 4, 4520},
    {14, 6, 2, 6, 7040},
    {14, 6, 2, 8, 3312},
    {14, 6, 4, 2, 360},
    {14, 6, 4, 4, 2632},
    {14, 6, 4, 6, 4992},
    {14, 6, 4, 8, 2752},
    {14, 6, 6, 4, 384},
    {14, 6, 6, 6, 1320},
    {14, 6, 6, 8, 1000},
    {14, 6, 8, 6, 120},
    {14, 6, 8, 8, 152},
    {14, 8, 0, 2, 144},
    {14, 8, 0, 4, 576},
    {14, 8, 0, 6, 720},
    {14, 8, 0, 8, 288},
    {14, 8, 2, 2, 264},
    {14, 8, 2, 4, 1208},
    {14, 8, 2, 6, 1664},
    {14, 8, 2, 8, 720},
    {14, 8, 4, 2, 120},
    {14, 8, 4, 4, 760},
    {14, 8, 4, 6, 1280},
    {14, 8, 4, 8, 640},
    {14, 8, 6, 4, 128},
    {14, 8, 6, 6, 376},
    {14, 8, 6, 8, 248},
    {14, 8, 8, 6, 40},
    {14, 8, 8, 8, 40},
    {16, 0, 0, 4, 72},
    {16, 0, 0, 6, 144},
    {16, 0, 0, 8, 72},
    {16, 0, 2, 4, 112},
    {16, 0, 2, 6, 256},
    {16, 0, 2, 8, 144},
    {16, 0, 4, 4, 44},
    {16, 0, 4, 6, 144},
    {16, 0, 4, 8, 104},
    {16, 0, 6, 6, 24},
    {16, 0, 6, 8, 32},
    {16, 0, 8, 8, 4},
    {16, 2, 0, 4, 288},
    {16, 2, 0, 6, 576},
    {16, 2, 0, 8, 288},
    {16, 2, 2, 4, 448},
    {16, 2, 2, 6, 1024},
    {16, 2, 2, 8, 576},
    {16, 2, 4, 4, 176},
    {16, 2, 4, 6, 576},
    {16, 2, 4, 8, 416},
    {16, 2, 6, 6, 96},
    {16, 2, 6, 8, 128},
    {16, 2, 8, 8, 16},
    {16, 4, 0, 4, 432},
    {16, 4, 0, 6, 864},
    {16, 4, 0, 8, 432},
    {16, 4, 2, 4, 672},
    {16, 4, 2, 6, 1536},
    {16, 4, 2, 8, 864},
    {16, 4, 4, 4, 264},
    {16, 4, 4, 6, 864},
    {16, 4, 4, 8, 624},
    {16, 4, 6, 6, 144},
    {16, 4, 6, 8, 192},
    {16, 4, 8, 8, 24},
    {16, 6, 0, 4, 288},
    {16, 6, 0, 6, 576},
    {16, 6, 0, 8, 288},
    {16, 6, 2, 4, 448},
    {16, 6, 2, 6, 1024},
    {16, 6, 2, 8, 576},
    {16, 6, 4, 4, 176},
    {16, 6, 4, 6, 576},
    {16, 6, 4, 8, 416},
    {16, 6, 6, 6, 96},
    {16, 6, 6, 8, 128},
    {16, 6, 8, 8, 16},
    {16, 8, 0, 4, 72},
    {16, 8, 0, 6, 144},
    {16, 8, 0, 8, 72},
    {16, 8, 2, 4, 112},
    {16, 8, 2, 6, 256},
    {16, 8, 2, 8, 144},
    {16, 8, 4, 4, 44},
    {16, 8, 4, 6, 144},
    {16, 8, 4, 8, 104},
    {16, 8, 6, 6, 24},
    {16, 8, 6, 8, 32},
    {16, 8, 8, 8, 4},
};

}  // namespace

std::span<const P5Term> p5_terms() { return kTerms; }

}  // namespace nphmm
