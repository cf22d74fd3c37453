#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace mrhf {

/// Zero-toughness (viscosity-dominated) plane-strain hydraulic fracture
/// similarity profiles on xi = x/a(t) in [0, 1].
///
/// Conventions (Q = injection rate into the half crack, a = half length):
///   a(t)  = gamma * (E' Q^3 / mu')^(1/6) * t^(2/3),      mu' = 12 mu
///   w(x,t) = (mu'/E')^(1/3) * gamma * (E' Q^3/mu')^(1/6) * t^(1/3) * Omega(xi)
///   p(x,t) = (mu' E'^2)^(1/3) * t^(-1/3) * Pi(xi)
///
/// Omega, Pi solve the coupled elasticity/lubrication similarity system with
/// zero stress intensity; near the tip Omega ~ B (1-xi)^(2/3) and
/// Pi ~ C0 - (2/B^2) (1-xi)^(-1/3).
namespace mvertex {

inline constexpr std::size_t kN = 400;
inline constexpr std::size_t kTail = 388;   ///< tail formula applies for xi >= kXi[kTail]
inline constexpr double kGammaHalf = 8.702357634685e-01;
inline constexpr double kBtip = 2.748608310944e+00;
inline constexpr double kC0 = 7.059728433286e-01;
inline constexpr double kCsing = 2.647306859719e-01;
inline constexpr double kPi0 = 5.448584120390e-01;
inline constexpr double kOmega0 = 1.829666263596e+00;

inline constexpr std::array<double, kN> kXi = {
    0.000000000000e+00, 3.936822729975e-03, 7.873584444579e-03, 1.181022412938e-02,
    1.574668077186e-02, 1.968289336230e-02, 2.361880089480e-02, 2.755434236816e-02,
    3.148945678688e-02, 3.542408316205e-02, 3.935816051236e-02, 4.329162786496e-02,
    4.722442425650e-02, 5.115648873401e-02, 5.508776035587e-02, 5.901817819272e-02,
    6.294768132848e-02, 6.687620886121e-02, 7.080369990411e-02, 7.473009358642e-02,
    7.865532905443e-02, 8.257934547233e-02, 8.650208202325e-02, 9.042347791012e-02,
    9.434347235666e-02, 9.826200460833e-02, 1.021790139332e-01, 1.060944396231e-01,
    1.100082209941e-01, 1.139202973880e-01, 1.178306081731e-01, 1.217390927447e-01,
    1.256456905268e-01, 1.295503409725e-01, 1.334529835649e-01, 1.373535578184e-01,
    1.412520032795e-01, 1.451482595277e-01, 1.490422661762e-01, 1.529339628732e-01,
    1.568232893029e-01, 1.607101851859e-01, 1.645945902807e-01, 1.684764443843e-01,
    1.723556873333e-01, 1.762322590047e-01, 1.801060993170e-01, 1.839771482308e-01,
    1.878453457503e-01, 1.917106319237e-01, 1.955729468444e-01, 1.994322306516e-01,
    2.032884235318e-01, 2.071414657193e-01, 2.109912974972e-01, 2.148378591984e-01,
    2.186810912064e-01, 2.225209339563e-01, 2.263573279359e-01, 2.301902136863e-01,
    2.340195318030e-01, 2.378452229367e-01, 2.416672277946e-01, 2.454854871408e-01,
    2.492999417974e-01, 2.531105326457e-01, 2.569172006266e-01, 2.607198867421e-01,
    2.645185320556e-01, 2.683130776935e-01, 2.721034648453e-01, 2.758896347654e-01,
    2.796715287731e-01, 2.834490882545e-01, 2.872222546623e-01, 2.909909695178e-01,
    2.947551744109e-01, 2.985148110017e-01, 3.022698210209e-01, 3.060201462710e-01,
    3.097657286271e-01, 3.135065100378e-01, 3.172424325260e-01, 3.209734381902e-01,
    3.246994692047e-01, 3.284204678212e-01, 3.321363763694e-01, 3.358471372576e-01,
    3.395526929743e-01, 3.432529860883e-01, 3.469479592501e-01, 3.506375551928e-01,
    3.543217167325e-01, 3.580003867700e-01, 3.616735082907e-01, 3.653410243664e-01,
    3.690028781555e-01, 3.726590129044e-01, 3.763093719478e-01, 3.799538987104e-01,
    3.835925367068e-01, 3.872252295431e-01, 3.908519209176e-01, 3.944725546216e-01,
    3.980870745401e-01, 4.016954246530e-01, 4.052975490358e-01, 4.088933918606e-01,
    4.124828973966e-01, 4.160660100115e-01, 4.196426741719e-01, 4.232128344444e-01,
    4.267764354964e-01, 4.303334220969e-01, 4.338837391176e-01, 4.374273315332e-01,
    4.409641444231e-01, 4.444941229715e-01, 4.480172124684e-01, 4.515333583109e-01,
    4.550425060034e-01, 4.585446011591e-01, 4.620395895001e-01, 4.655274168590e-01,
    4.690080291791e-01, 4.724813725159e-01, 4.759473930371e-01, 4.794060370242e-01,
    4.828572508730e-01, 4.863009810943e-01, 4.897371743150e-01, 4.931657772789e-01,
    4.965867368473e-01, 5.000000000000e-01, 5.034055138360e-01, 5.068032255746e-01,
    5.101930825559e-01, 5.135750322417e-01, 5.169490222164e-01, 5.203150001878e-01,
    5.236729139879e-01, 5.270227115735e-01, 5.303643410274e-01, 5.336977505588e-01,
    5.370228885046e-01, 5.403397033295e-01, 5.436481436276e-01, 5.469481581224e-01,
    5.502396956684e-01, 5.535227052511e-01, 5.567971359883e-01, 5.600629371310e-01,
    5.633200580636e-01, 5.665684483052e-01, 5.698080575103e-01, 5.730388354692e-01,
    5.762607321093e-01, 5.794736974957e-01, 5.826776818318e-01, 5.858726354602e-01,
    5.890585088635e-01, 5.922352526650e-01, 5.954028176295e-01, 5.985611546641e-01,
    6.017102148188e-01, 6.048499492876e-01, 6.079803094089e-01, 6.111012466663e-01,
    6.142127126897e-01, 6.173146592554e-01, 6.204070382877e-01, 6.234898018587e-01,
    6.265629021900e-01, 6.296262916527e-01, 6.326799227684e-01, 6.357237482100e-01,
    6.387577208023e-01, 6.417817935230e-01, 6.447959195031e-01, 6.478000520277e-01,
    6.507941445368e-01, 6.537781506262e-01, 6.567520240477e-01, 6.597157187105e-01,
    6.626691886814e-01, 6.656123881855e-01, 6.685452716073e-01, 6.714677934911e-01,
    6.743799085419e-01, 6.772815716257e-01, 6.801727377709e-01, 6.830533621683e-01,
    6.859234001721e-01, 6.887828073007e-01, 6.916315392371e-01, 6.944695518300e-01,
    6.972968010940e-01, 7.001132432106e-01, 7.029188345288e-01, 7.057135315658e-01,
    7.084972910075e-01, 7.112700697096e-01, 7.140318246977e-01, 7.167825131685e-01,
    7.195220924899e-01, 7.222505202023e-01, 7.249677540188e-01, 7.276737518259e-01,
    7.303684716844e-01, 7.330518718298e-01, 7.357239106731e-01, 7.383845468014e-01,
    7.410337389783e-01, 7.436714461451e-01, 7.462976274209e-01, 7.489122421034e-01,
    7.515152496698e-01, 7.541066097769e-01, 7.566862822622e-01, 7.592542271444e-01,
    7.618104046237e-01, 7.643547750830e-01, 7.668872990879e-01, 7.694079373878e-01,
    7.719166509163e-01, 7.744134007917e-01, 7.768981483178e-01, 7.793708549845e-01,
    7.818314824680e-01, 7.842799926322e-01, 7.867163475284e-01, 7.891405093964e-01,
    7.915524406651e-01, 7.939521039528e-01, 7.963394620680e-01, 7.987144780099e-01,
    8.010771149691e-01, 8.034273363279e-01, 8.057651056610e-01, 8.080903867362e-01,
    8.104031435149e-01, 8.127033401525e-01, 8.149909409991e-01, 8.172659106000e-01,
    8.195282136962e-01, 8.217778152252e-01, 8.240146803213e-01, 8.262387743160e-01,
    8.284500627390e-01, 8.306485113182e-01, 8.328340859808e-01, 8.350067528534e-01,
    8.371664782625e-01, 8.393132287354e-01, 8.414469710004e-01, 8.435676719874e-01,
    8.456752988284e-01, 8.477698188581e-01, 8.498511996142e-01, 8.519194088383e-01,
    8.539744144759e-01, 8.560161846773e-01, 8.580446877977e-01, 8.600598923983e-01,
    8.620617672459e-01, 8.640502813144e-01, 8.660254037844e-01, 8.679871040444e-01,
    8.699353516905e-01, 8.718701165276e-01, 8.737913685696e-01, 8.756990780396e-01,
    8.775932153707e-01, 8.794737512065e-01, 8.813406564011e-01, 8.831939020201e-01,
    8.850334593407e-01, 8.868592998523e-01, 8.886713952569e-01, 8.904697174694e-01,
    8.922542386184e-01, 8.940249310461e-01, 8.957817673093e-01, 8.975247201794e-01,
    8.992537626431e-01, 9.009688679024e-01, 9.026700093757e-01, 9.043571606976e-01,
    9.060302957195e-01, 9.076893885101e-01, 9.093344133558e-01, 9.109653447609e-01,
    9.125821574482e-01, 9.141848263593e-01, 9.157733266551e-01, 9.173476337159e-01,
    9.189077231422e-01, 9.204535707547e-01, 9.219851525948e-01, 9.235024449252e-01,
    9.250054242299e-01, 9.264940672148e-01, 9.279683508079e-01, 9.294282521599e-01,
    9.308737486442e-01, 9.323048178577e-01, 9.337214376207e-01, 9.351235859777e-01,
    9.365112411971e-01, 9.378843817722e-01, 9.392429864212e-01, 9.405870340877e-01,
    9.419165039407e-01, 9.432313753752e-01, 9.445316280126e-01, 9.458172417006e-01,
    9.470881965141e-01, 9.483444727550e-01, 9.495860509527e-01, 9.508129118644e-01,
    9.520250364755e-01, 9.532224059998e-01, 9.544050018795e-01, 9.555728057861e-01,
    9.567257996203e-01, 9.578639655122e-01, 9.589872858217e-01, 9.600957431390e-01,
    9.611893202845e-01, 9.622680003093e-01, 9.633317664951e-01, 9.643806023553e-01,
    9.654144916341e-01, 9.664334183078e-01, 9.674373665844e-01, 9.684263209041e-01,
    9.694002659393e-01, 9.703591865954e-01, 9.713030680103e-01, 9.722318955551e-01,
    9.731456548344e-01, 9.740443316860e-01, 9.749279121818e-01, 9.757963826274e-01,
    9.766497295628e-01, 9.774879397621e-01, 9.783110002344e-01, 9.791188982233e-01,
    9.799116212074e-01, 9.806891569007e-01, 9.814514932524e-01, 9.821986184474e-01,
    9.829305209062e-01, 9.836471892853e-01, 9.843486124774e-01, 9.850347796113e-01,
    9.857056800524e-01, 9.863613034027e-01, 9.870016395009e-01, 9.876266784227e-01,
    9.882364104808e-01, 9.888308262251e-01, 9.894099164432e-01, 9.899736721598e-01,
    9.905220846375e-01, 9.910551453767e-01, 9.915728461157e-01, 9.920751788307e-01,
    9.925621357364e-01, 9.930337092856e-01, 9.934898921695e-01, 9.939306773179e-01,
    9.943560578993e-01, 9.947660273208e-01, 9.951605792285e-01, 9.955397075073e-01,
    9.959034062813e-01, 9.962516699136e-01, 9.965844930067e-01, 9.969018704022e-01,
    9.972037971812e-01, 9.974902686643e-01, 9.977612804115e-01, 9.980168282225e-01,
    9.982569081368e-01, 9.984815164333e-01, 9.986906496310e-01, 9.988843044886e-01,
    9.990624780047e-01, 9.992251674178e-01, 9.993723702065e-01, 9.995040840893e-01,
    9.996203070250e-01, 9.997210372120e-01, 9.998062730894e-01, 9.998760133360e-01,
    9.999302568710e-01, 9.999690028536e-01, 9.999922506834e-01, 1.000000000000e+00
};

inline constexpr std::array<double, kN> kOmega = {
    1.829666263596e+00, 1.829633789320e+00, 1.829660560818e+00, 1.829339791998e+00,
    1.829088986382e+00, 1.828797593976e+00, 1.828549157525e+00, 1.828023809332e+00,
    1.827545628937e+00, 1.827032679062e+00, 1.826552917316e+00, 1.825829489191e+00,
    1.825143136348e+00, 1.824425366100e+00, 1.823733950728e+00, 1.822821023407e+00,
    1.821938677354e+00, 1.821027270862e+00, 1.820136911570e+00, 1.819041767967e+00,
    1.817972445526e+00, 1.816875880852e+00, 1.815795995631e+00, 1.814524822177e+00,
    1.813275736854e+00, 1.812000891436e+00, 1.810738999165e+00, 1.809297167953e+00,
    1.807874374008e+00, 1.806427073991e+00, 1.804989469551e+00, 1.803381745192e+00,
    1.801790494931e+00, 1.800175828842e+00, 1.798567960599e+00, 1.796798645420e+00,
    1.795043608282e+00, 1.793266123209e+00, 1.791492825026e+00, 1.789565862558e+00,
    1.787651269205e+00, 1.785715101681e+00, 1.783780745485e+00, 1.781699796101e+00,
    1.779629538221e+00, 1.777538505885e+00, 1.775447107224e+00, 1.773215604789e+00,
    1.770993307053e+00, 1.768750975303e+00, 1.766506269323e+00, 1.764127464590e+00,
    1.761756538207e+00, 1.759366270154e+00, 1.756971768042e+00, 1.754448762540e+00,
    1.751932446168e+00, 1.749397441015e+00, 1.746856473035e+00, 1.744192245998e+00,
    1.741533637663e+00, 1.738856960808e+00, 1.736172709825e+00, 1.733370139898e+00,
    1.730572222376e+00, 1.727756829421e+00, 1.724932357505e+00, 1.721994240481e+00,
    1.719059901772e+00, 1.716108657984e+00, 1.713146927840e+00, 1.710075991320e+00,
    1.707008041402e+00, 1.703923737671e+00, 1.700827630153e+00, 1.697626545772e+00,
    1.694427730471e+00, 1.691213096557e+00, 1.687985425135e+00, 1.684656818876e+00,
    1.681329831452e+00, 1.677987547086e+00, 1.674631069935e+00, 1.671177530876e+00,
    1.667725021808e+00, 1.664257726082e+00, 1.660775156260e+00, 1.657199244064e+00,
    1.653623829373e+00, 1.650034128736e+00, 1.646428142847e+00, 1.642732394208e+00,
    1.639036662586e+00, 1.635327137712e+00, 1.631600383310e+00, 1.627787317541e+00,
    1.623973836503e+00, 1.620147048224e+00, 1.616302150201e+00, 1.612374274102e+00,
    1.608445595323e+00, 1.604504089785e+00, 1.600543655910e+00, 1.596503468030e+00,
    1.592462132005e+00, 1.588408445176e+00, 1.584335070924e+00, 1.580185065313e+00,
    1.576033605447e+00, 1.571870267069e+00, 1.567686539859e+00, 1.563429209388e+00,
    1.559170155597e+00, 1.554899692685e+00, 1.550608195608e+00, 1.546246034915e+00,
    1.541881916821e+00, 1.537506856757e+00, 1.533110171887e+00, 1.528645680004e+00,
    1.524179029777e+00, 1.519701903074e+00, 1.515202614402e+00, 1.510638297113e+00,
    1.506071652009e+00, 1.501494994777e+00, 1.496895690845e+00, 1.492234062804e+00,
    1.487569967450e+00, 1.482896323617e+00, 1.478199599875e+00, 1.473443186519e+00,
    1.468684194970e+00, 1.463916118287e+00, 1.459124579222e+00, 1.454275918515e+00,
    1.449424596118e+00, 1.444564651979e+00, 1.439680913042e+00, 1.434742557061e+00,
    1.429801482156e+00, 1.424852249256e+00, 1.419878938625e+00, 1.414853455015e+00,
    1.409825220491e+00, 1.404789292348e+00, 1.399729052537e+00, 1.394619025855e+00,
    1.389506240585e+00, 1.384386226940e+00, 1.379241716281e+00, 1.374049749244e+00,
    1.368855039415e+00, 1.363653567535e+00, 1.358427461557e+00, 1.353156176206e+00,
    1.347882186557e+00, 1.342601902453e+00, 1.337296895163e+00, 1.331948933962e+00,
    1.326598328947e+00, 1.321241898516e+00, 1.315860703613e+00, 1.310438730486e+00,
    1.305014195382e+00, 1.299584305493e+00, 1.294129657506e+00, 1.288636358836e+00,
    1.283140600793e+00, 1.277639960326e+00, 1.272114615713e+00, 1.266552701301e+00,
    1.260988450359e+00, 1.255419791206e+00, 1.249826529407e+00, 1.244198733409e+00,
    1.238568743486e+00, 1.232934821528e+00, 1.227276445997e+00, 1.221585527842e+00,
    1.215892577701e+00, 1.210196173772e+00, 1.204475512981e+00, 1.198724258291e+00,
    1.192971152503e+00, 1.187215073342e+00, 1.181434981790e+00, 1.175626203296e+00,
    1.169815773204e+00, 1.164002852414e+00, 1.158166211631e+00, 1.152302750103e+00,
    1.146437854797e+00, 1.140570953821e+00, 1.134680673389e+00, 1.128765398590e+00,
    1.122848925902e+00, 1.116930935016e+00, 1.110989953610e+00, 1.105025765282e+00,
    1.099060632813e+00, 1.093094472157e+00, 1.087105758623e+00, 1.081095587510e+00,
    1.075084743701e+00, 1.069073364349e+00, 1.063039918826e+00, 1.056986727755e+00,
    1.050933153005e+00, 1.044879538095e+00, 1.038804393192e+00, 1.032711178212e+00,
    1.026617886065e+00, 1.020525051994e+00, 1.014411274035e+00, 1.008281065633e+00,
    1.002151104041e+00, 9.960221017330e-01, 9.898727920901e-01, 9.837086564957e-01,
    9.775451091669e-01, 9.713830254446e-01, 9.652013219546e-01, 9.590063625472e-01,
    9.528123504042e-01, 9.466203094605e-01, 9.404093879646e-01, 9.341867467967e-01,
    9.279654295536e-01, 9.217465945498e-01, 9.155096705562e-01, 9.092625300134e-01,
    9.030171078919e-01, 8.967746826991e-01, 8.905150131951e-01, 8.842465978109e-01,
    8.779803134153e-01, 8.717175445194e-01, 8.654384299521e-01, 8.591520083993e-01,
    8.528681487732e-01, 8.465883273665e-01, 8.402931138180e-01, 8.339920011009e-01,
    8.276938999917e-01, 8.214003642772e-01, 8.150924458605e-01, 8.087800057369e-01,
    8.024710460959e-01, 7.961671838356e-01, 7.898500053418e-01, 7.835296530063e-01,
    7.772132697592e-01, 7.709025210985e-01, 7.645795809331e-01, 7.582547859981e-01,
    7.519344691223e-01, 7.456203297322e-01, 7.392951831794e-01, 7.329694729971e-01,
    7.266487709516e-01, 7.203347955323e-01, 7.140110583961e-01, 7.076880217695e-01,
    7.013705453271e-01, 6.950603515275e-01, 6.887417042045e-01, 6.824249955453e-01,
    6.761144220875e-01, 6.698116949011e-01, 6.635018869496e-01, 6.571952309495e-01,
    6.508953092939e-01, 6.446038060041e-01, 6.383066612849e-01, 6.320138581801e-01,
    6.257284140215e-01, 6.194519697822e-01, 6.131713922619e-01, 6.068963237817e-01,
    6.006292658459e-01, 5.943717999984e-01, 5.881117803195e-01, 5.818584164326e-01,
    5.756137434576e-01, 5.693792667045e-01, 5.631438896517e-01, 5.569162962405e-01,
    5.506981049252e-01, 5.444907275072e-01, 5.382841805204e-01, 5.320865281442e-01,
    5.258990222307e-01, 5.197229632815e-01, 5.135495462015e-01, 5.073861201418e-01,
    5.012336208364e-01, 4.950932191288e-01, 4.889573553993e-01, 4.828325672226e-01,
    4.767195252029e-01, 4.706192515474e-01, 4.645255011506e-01, 4.584439020792e-01,
    4.523749113941e-01, 4.463193830124e-01, 4.402724574765e-01, 4.342387539266e-01,
    4.282185681686e-01, 4.222125654429e-01, 4.162173453491e-01, 4.102364170845e-01,
    4.042699683108e-01, 3.983184544127e-01, 3.923800099330e-01, 3.864569314009e-01,
    3.805493524047e-01, 3.746574964405e-01, 3.687811115874e-01, 3.629211771572e-01,
    3.570778278561e-01, 3.512510323467e-01, 3.454422338034e-01, 3.396509878359e-01,
    3.338774867709e-01, 3.281214205237e-01, 3.223860121872e-01, 3.166692851434e-01,
    3.109715473821e-01, 3.052921851419e-01, 2.996362898661e-01, 2.940002420516e-01,
    2.883845252141e-01, 2.827881959375e-01, 2.772183064601e-01, 2.716694815418e-01,
    2.661424422548e-01, 2.606358884984e-01, 2.551589302393e-01, 2.497043214418e-01,
    2.442730853751e-01, 2.388635372142e-01, 2.334869466526e-01, 2.281340796623e-01,
    2.228063295356e-01, 2.175015977973e-01, 2.122334216353e-01, 2.069904599071e-01,
    2.017745477056e-01, 1.965831433518e-01, 1.914321659557e-01, 1.863080466565e-01,
    1.812131391353e-01, 1.761444288143e-01, 1.711203389740e-01, 1.661249517949e-01,
    1.611612228502e-01, 1.562256357159e-01, 1.513392494896e-01, 1.464836770500e-01,
    1.416625679239e-01, 1.368718772452e-01, 1.321354432383e-01, 1.274322927984e-01,
    1.227668737259e-01, 1.181345913983e-01, 1.135622216212e-01, 1.090260973355e-01,
    1.045315869892e-01, 1.000735356946e-01, 9.568183626146e-02, 9.133003794763e-02,
    8.702458059500e-02, 8.275976028084e-02, 7.856879802293e-02, 7.442240693052e-02,
    7.032829749137e-02, 6.628027305321e-02, 6.231514871919e-02, 5.840082768061e-02,
    5.454658344871e-02, 5.074588413005e-02, 4.703951771732e-02, 4.339278765409e-02,
    3.981703863970e-02, 3.630583448809e-02, 3.290464565149e-02, 2.957700279716e-02,
    2.633805178844e-02, 2.318201331931e-02, 2.015884715178e-02, 1.723202042889e-02,
    1.442157955904e-02, 1.172688645899e-02, 9.209498126660e-03, 6.841275846287e-03,
    4.661366916824e-03, 2.699305961385e-03, 1.077880082862e-03, 0.000000000000e+00
};

/// Pressure samples on kXi[0..kTail]; beyond that use the tail formula.
inline constexpr std::array<double, kTail + 1> kPi = {
    5.448584120390e-01, 5.440104568745e-01, 5.431640540437e-01, 5.423190176787e-01,
    5.414751697256e-01, 5.406325447991e-01, 5.397911586237e-01, 5.389508654001e-01,
    5.381115224677e-01, 5.372731531835e-01, 5.364357711909e-01, 5.355992485027e-01,
    5.347634599420e-01, 5.339284245575e-01, 5.330941540287e-01, 5.322605320149e-01,
    5.314274451338e-01, 5.305949097942e-01, 5.297629359231e-01, 5.289314157470e-01,
    5.281002447498e-01, 5.272694374102e-01, 5.264390020512e-01, 5.256088375789e-01,
    5.247788465215e-01, 5.239490418007e-01, 5.231194302341e-01, 5.222899161142e-01,
    5.214604077537e-01, 5.206309167361e-01, 5.198014484374e-01, 5.189719115863e-01,
    5.181422193473e-01, 5.173123821021e-01, 5.164824038250e-01, 5.156521969465e-01,
    5.148216787601e-01, 5.139908585316e-01, 5.131597388566e-01, 5.123282352793e-01,
    5.114962686405e-01, 5.106638471448e-01, 5.098309720189e-01, 5.089975614353e-01,
    5.081635393016e-01, 5.073289127936e-01, 5.064936817691e-01, 5.056577666186e-01,
    5.048210939103e-01, 5.039836698079e-01, 5.031454927913e-01, 5.023064851158e-01,
    5.014665756600e-01, 5.006257695801e-01, 4.997840639617e-01, 4.989413826150e-01,
    4.980976564226e-01, 4.972528895273e-01, 4.964070775981e-01, 4.955601457240e-01,
    4.947120265186e-01, 4.938627230980e-01, 4.930122296856e-01, 4.921604723997e-01,
    4.913073853392e-01, 4.904529705726e-01, 4.895972208431e-01, 4.887400630699e-01,
    4.878814326127e-01, 4.870213304650e-01, 4.861597478500e-01, 4.852966122756e-01,
    4.844318601550e-01, 4.835654913733e-01, 4.826974955877e-01, 4.818278006962e-01,
    4.809563439714e-01, 4.800831241512e-01, 4.792081292748e-01, 4.783312874418e-01,
    4.774525366010e-01, 4.765718742979e-01, 4.756892868965e-01, 4.748047025166e-01,
    4.739180596086e-01, 4.730293544745e-01, 4.721385717394e-01, 4.712456393678e-01,
    4.703504961431e-01, 4.694531370665e-01, 4.685535449544e-01, 4.676516474439e-01,
    4.667473834869e-01, 4.658407467209e-01, 4.649317180760e-01, 4.640202246925e-01,
    4.631062055289e-01, 4.621896527890e-01, 4.612705454325e-01, 4.603488099330e-01,
    4.594243850955e-01, 4.584972616128e-01, 4.575674163821e-01, 4.566347750400e-01,
    4.556992760769e-01, 4.547609085903e-01, 4.538196473140e-01, 4.528754168751e-01,
    4.519281552869e-01, 4.509778499586e-01, 4.500244733513e-01, 4.490679489057e-01,
    4.481082139931e-01, 4.471452542324e-01, 4.461790396927e-01, 4.452094924469e-01,
    4.442365490541e-01, 4.432601932323e-01, 4.422803925281e-01, 4.412970674588e-01,
    4.403101535961e-01, 4.393196326353e-01, 4.383254694587e-01, 4.373275828324e-01,
    4.363259071585e-01, 4.353204219762e-01, 4.343110893493e-01, 4.332978260876e-01,
    4.322805652329e-01, 4.312592840229e-01, 4.302339415343e-01, 4.292044524052e-01,
    4.281707481161e-01, 4.271328034436e-01, 4.260905742942e-01, 4.250439729060e-01,
    4.239929289857e-01, 4.229374146745e-01, 4.218773825082e-01, 4.208127420827e-01,
    4.197434211053e-01, 4.186693888903e-01, 4.175905943841e-01, 4.165069442823e-01,
    4.154183640513e-01, 4.143248199686e-01, 4.132262571528e-01, 4.121225791222e-01,
    4.110137088437e-01, 4.098996093277e-01, 4.087802216037e-01, 4.076554457156e-01,
    4.065252018520e-01, 4.053894495032e-01, 4.042481253238e-01, 4.031011255625e-01,
    4.019483673289e-01, 4.007898063147e-01, 3.996253744858e-01, 3.984549639497e-01,
    3.972784884104e-01, 3.960958994537e-01, 3.949071240138e-01, 3.937120496805e-01,
    3.925105863969e-01, 3.913026813053e-01, 3.900882559297e-01, 3.888671929337e-01,
    3.876393981119e-01, 3.864048137892e-01, 3.851633556638e-01, 3.839149010273e-01,
    3.826593511013e-01, 3.813966429802e-01, 3.801266860786e-01, 3.788493518280e-01,
    3.775645364116e-01, 3.762721712353e-01, 3.749721589249e-01, 3.736643645169e-01,
    3.723486786434e-01, 3.710250265145e-01, 3.696933034079e-01, 3.683533673779e-01,
    3.670051029394e-01, 3.656484285423e-01, 3.642832314982e-01, 3.629093622308e-01,
    3.615266985121e-01, 3.601351514039e-01, 3.587345995652e-01, 3.573248850736e-01,
    3.559058782639e-01, 3.544774821089e-01, 3.530395658532e-01, 3.515919624351e-01,
    3.501345339799e-01, 3.486671745891e-01, 3.471897432434e-01, 3.457020628622e-01,
    3.442039864998e-01, 3.426953985101e-01, 3.411761466629e-01, 3.396460428786e-01,
    3.381049301782e-01, 3.365526821844e-01, 3.349891343971e-01, 3.334140866444e-01,
    3.318273708347e-01, 3.302288487541e-01, 3.286183424457e-01, 3.269956384218e-01,
    3.253605562655e-01, 3.237129446800e-01, 3.220526109187e-01, 3.203793268052e-01,
    3.186928982307e-01, 3.169931594079e-01, 3.152799012992e-01, 3.135528794951e-01,
    3.118118846506e-01, 3.100567348934e-01, 3.082872032001e-01, 3.065030271857e-01,
    3.047039805188e-01, 3.028898634315e-01, 3.010604289963e-01, 2.992153948805e-01,
    2.973545157777e-01, 2.954775719621e-01, 2.935842944245e-01, 2.916743786462e-01,
    2.897475580783e-01, 2.878035906825e-01, 2.858421828880e-01, 2.838630054417e-01,
    2.818657679588e-01, 2.798502033914e-01, 2.778159907750e-01, 2.757627732105e-01,
    2.736902335018e-01, 2.715980764917e-01, 2.694859505769e-01, 2.673534678747e-01,
    2.652002809518e-01, 2.630260629679e-01, 2.608304279496e-01, 2.586129531905e-01,
    2.563732570620e-01, 2.541109769055e-01, 2.518256880716e-01, 2.495169285956e-01,
    2.471842780630e-01, 2.448273331942e-01, 2.424456256757e-01, 2.400386491438e-01,
    2.376059390519e-01, 2.351470459009e-01, 2.326614519113e-01, 2.301486003349e-01,
    2.276079762432e-01, 2.250390773622e-01, 2.224413296704e-01, 2.198141190357e-01,
    2.171568728086e-01, 2.144690282321e-01, 2.117499470918e-01, 2.089989496502e-01,
    2.062153968773e-01, 2.033986564283e-01, 2.005480165227e-01, 1.976627221113e-01,
    1.947420575189e-01, 1.917853100035e-01, 1.887916831122e-01, 1.857603349670e-01,
    1.826904610150e-01, 1.795812552182e-01, 1.764318232211e-01, 1.732412225744e-01,
    1.700085451905e-01, 1.667328762574e-01, 1.634132076656e-01, 1.600484799012e-01,
    1.566376636768e-01, 1.531797167229e-01, 1.496734980682e-01, 1.461178112153e-01,
    1.425114842529e-01, 1.388533247585e-01, 1.351420357143e-01, 1.313762594225e-01,
    1.275546551915e-01, 1.236758526882e-01, 1.197383705204e-01, 1.157406601360e-01,
    1.116811798989e-01, 1.075583473698e-01, 1.033704619078e-01, 9.911574751531e-02,
    9.479242175452e-02, 9.039864762068e-02, 8.593246194224e-02, 8.139181574959e-02,
    7.677463600084e-02, 7.207877795847e-02, 6.730196173124e-02, 6.244180822445e-02,
    5.749589100233e-02, 5.246169040490e-02, 4.733654133094e-02, 4.211766211334e-02,
    3.680219298215e-02, 3.138715359494e-02, 2.586940617784e-02, 2.024567368346e-02,
    1.451256014601e-02, 8.666513882039e-03, 2.703811491622e-03, -3.379439720287e-03,
    -9.587305816463e-03, -1.592405431574e-02, -2.239414192536e-02, -2.900223481960e-02,
    -3.575324570231e-02, -4.265234908734e-02, -4.970493071054e-02, -5.691664025435e-02,
    -6.429347312906e-02, -7.184176741986e-02, -7.956810119640e-02, -8.747939147372e-02,
    -9.558303698643e-02, -1.038868893410e-01, -1.123990791183e-01, -1.211281808437e-01,
    -1.300834396756e-01, -1.392747066801e-01, -1.487121669054e-01, -1.584065991647e-01,
    -1.683697194921e-01, -1.786140669257e-01, -1.891525953564e-01, -1.999990708832e-01,
    -2.111685800993e-01, -2.226773480851e-01, -2.345421387513e-01, -2.467808546926e-01,
    -2.594132823384e-01, -2.724608178676e-01, -2.859455945978e-01, -2.998913866190e-01,
    -3.143247019318e-01, -3.292743849955e-01, -3.447703487743e-01, -3.608449453812e-01,
    -3.775345846943e-01, -3.948791760877e-01, -4.129202772910e-01, -4.317032057886e-01,
    -4.512794787553e-01, -4.717060579368e-01, -4.930426207385e-01, -5.153548946426e-01,
    -5.387184384694e-01, -5.632176855477e-01, -5.889418662719e-01, -6.159904695120e-01,
    -6.444793431592e-01, -6.745396646417e-01, -7.063117570457e-01, -7.399545129042e-01,
    -7.756558226472e-01, -8.136320919103e-01, -8.541187711334e-01, -8.973878832292e-01,
    -9.437674223105e-01, -9.936438602861e-01, -1.047447913424e+00, -1.105690967879e+00,
    -1.169006079531e+00, -1.238163449423e+00, -1.314052309696e+00, -1.397770765825e+00,
    -1.490731815711e+00, -1.594739714722e+00, -1.711995510659e+00, -1.845389620400e+00,
    -1.998880959403e+00
};

/// Linear interpolation of Omega(xi); clamps to [0, 1].
inline double omega(double x) {
    if (x <= 0.0) return kOmega.front();
    if (x >= 1.0) return 0.0;
    auto it = std::upper_bound(kXi.begin(), kXi.end(), x);
    std::size_t j = static_cast<std::size_t>(it - kXi.begin());
    double t = (x - kXi[j - 1]) / (kXi[j] - kXi[j - 1]);
    return (1.0 - t) * kOmega[j - 1] + t * kOmega[j];
}

/// Pi(xi); singular (-> -inf) as xi -> 1.
inline double pi(double x) {
    if (x <= 0.0) return kPi.front();
    if (x >= kXi[kTail])
        return kC0 - kCsing * std::pow(std::max(1.0 - x, 1e-300), -1.0 / 3.0);
    auto it = std::upper_bound(kXi.begin(), kXi.begin() + kTail + 1, x);
    std::size_t j = static_cast<std::size_t>(it - kXi.begin());
    double t = (x - kXi[j - 1]) / (kXi[j] - kXi[j - 1]);
    return (1.0 - t) * kPi[j - 1] + t * kPi[j];
}

}  // namespace mvertex
}  // namespace mrhf
