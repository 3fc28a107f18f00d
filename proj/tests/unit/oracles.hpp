#pragma once

// Generated by tests/oracles/gen_oracles.py from mpmath. Do not edit.

#include <array>
#include <utility>

namespace oracles {

struct C { const char* re; const char* im; };
struct PointC { C s; C value; };
struct PointR { const char* x; const char* value; };

inline constexpr std::array<PointC, 8> kZeta{{
    {{"2.00000000000000000000000000000000000000000000", "0.0"}, {"1.64493406684822643647241516664602518921894990", "0.0"}},
    {{"3.00000000000000000000000000000000000000000000e-1", "1.00000000000000000000000000000000000000000000e+2"}, {"3.66807512485171508350958790633987621959299340", "3.14502417902701444042121445145709548404453847e-2"}},
    {{"5.00000000000000000000000000000000000000000000e-1", "1.41347251417346937904572519835624702707842571e+1"}, {"3.03239665891570662537669387863772385037830173e-50", "-1.90478666275865431080463364850587593684780896e-49"}},
    {{"-5.00000000000000000000000000000000000000000000e-1", "3.00000000000000000000000000000000000000000000"}, {"3.52913879819287252724909342148370925863769913e-1", "1.21249544160369820486715138575714825359429190e-2"}},
    {{"-3.00000000000000000000000000000000000000000000", "0.0"}, {"8.33333333333333333333333333333333333333333333e-3", "0.0"}},
    {{"1.00000010000000000000000000000000000000000000", "0.0"}, {"1.00000005772156721831173605223682694737205677e+7", "0.0"}},
    {{"7.50000000000000000000000000000000000000000000e-1", "-7.50000000000000000000000000000000000000000000"}, {"1.12000514727052130112740894773768492047420769", "-3.40305491849453978741704279749673736241606078e-1"}},
    {{"4.00000000000000000000000000000000000000000000e+1", "1.00000000000000000000000000000000000000000000"}, {"1.00000000000069961874259947707084459766962422", "-5.81131968698439053009062988022168910766144396e-13"}},
}};

inline constexpr std::array<PointC, 4> kEtaFactor{{
    {{"1.00000000000000000000000000000000000000000000", "0.0"}, {"6.93147180559945309417232121458176568075500134e-1", "0.0"}},
    {{"5.00000000000000000000000000000000000000000000e-1", "3.00000000000000000000000000000000000000000000"}, {"9.97091432527484834123972448231498965694419356e-1", "5.24792724747039855059386178409793018389499214e-1"}},
    {{"1.00000000000000000000000000000000000000000000e-1", "0.0"}, {"5.22270282464570505493651772821011345105376916e-1", "0.0"}},
    {{"2.00000000000000000000000000000000000000000000", "-2.00000000000000000000000000000000000000000000e+1"}, {"9.39560244547623387699765558247812458071632678e-1", "-1.96856165990677062908638964026073693510045940e-1"}},
}};

inline constexpr std::array<PointC, 5> kGamma{{
    {{"5.00000000000000000000000000000000000000000000e-1", "0.0"}, {"1.77245385090551602729816748334114518279754946", "0.0"}},
    {{"-2.50000000000000000000000000000000000000000000", "1.00000000000000000000000000000000000000000000"}, {"-4.17366258078936137447601383097804037481090937e-2", "-8.63691073697634846941862793470282105409394390e-2"}},
    {{"1.00000000000000000000000000000000000000000000e+1", "3.00000000000000000000000000000000000000000000"}, {"1.97624138949765469045121503768106492939556891e+5", "1.13252918959471613637777548239262458101116482e+5"}},
    {{"1.00000000000000000000000000000000000000000000e-1", "-2.00000000000000000000000000000000000000000000e-1"}, {"1.53910034338679480201930277413963823207693866", "3.83849190183791126069785702793113357634867879"}},
    {{"-7.50000000000000000000000000000000000000000000", "0.0"}, {"2.23849328859689497163740395769826798779577292e-4", "0.0"}},
}};

inline constexpr std::array<PointC, 3> kLogGamma{{
    {{"1.00000000000000000000000000000000000000000000e+13", "0.0"}, {"2.89336062089211891057767632493096343706757484e+14", "0.0"}},
    {{"1.00000000000000000000000000000000000000000000e+2", "5.00000000000000000000000000000000000000000000e+1"}, {"3.47053049933172473631303430409572215380293520e+2", "2.31969701846462209760579764815490554223140884e+2"}},
    {{"3.00000000000000000000000000000000000000000000", "-4.00000000000000000000000000000000000000000000"}, {"-1.75662678460378411053060418162327578515670661", "-4.74266443803465792819488940755002274088830335"}},
}};

// B(a, b) as {a, b, value}.
inline constexpr std::array<std::array<C, 3>, 4> kBeta{{
    {{{"2.50000000000000000000000000000000000000000000e-1", "-7.06700000000000000000000000000000000000000000"}, {"1.00100000000000000000000000000000000000000000e+3", "0.0"}, {"2.12047185749844984795086960353852752186702174e-7", "-4.22715869073256163764084542446266508095306872e-6"}}},
    {{{"5.00000000000000000000000000000000000000000000e-1", "0.0"}, {"3.00000000000000000000000000000000000000000000", "0.0"}, {"1.06666666666666666666666666666666666666666667", "0.0"}}},
    {{{"1.37500000000000000000000000000000000000000000", "0.0"}, {"2.20264657948067000000000000000000000000000000e+4", "0.0"}, {"9.49085473712824825238572477564520129702473523e-7", "0.0"}}},
    {{{"2.00000000000000000000000000000000000000000000", "1.00000000000000000000000000000000000000000000"}, {"3.50000000000000000000000000000000000000000000", "0.0"}, {"2.18805789568515543165575413862922891500828959e-2", "-4.68492424985125282397027717977241250157593694e-2"}}},
}};

inline constexpr std::array<PointR, 5> kLogZetaDeriv{{
    {"4.50000000000000000000000000000000000000000000", "2.44226443117970656853925243026236429356407090e-1"},
    {"1.00100000000000000000000000000000000000000000", "5.77028170342577392780919624444217359388030575e-1"},
    {"1.25000000000000000000000000000000000000000000e+1", "8.68356441399830276399566946742101739098740730e-2"},
    {"2.00000000000000000000000000000000000000000000", "4.30039006905467193600135639980269997596517719e-1"},
    {"1.25000000000000000000000000000000000000000000", "5.33345518755237519220784767364404197815838907e-1"},
}};

// P_k(s) as {s, k, value}.
inline constexpr std::array<std::pair<PointC, int>, 4> kPochhammer{{
    {{{"5.00000000000000000000000000000000000000000000e-1", "1.40000000000000000000000000000000000000000000e+1"}, {"-2.72465552842881944444444444444444444444444444e+4", "-3.10108745659722222222222222222222222222222222e+3"}}, 7},
    {{{"1.00000000000000000000000000000000000000000000", "2.00000000000000000000000000000000000000000000"}, {"-4.43533185828587426388171077098607632858276314e-2", "1.20026497881512714418845994600640423325292618e-1"}}, 100},
    {{{"3.00000000000000000000000000000000000000000000e-1", "-5.00000000000000000000000000000000000000000000"}, {"-2.15053702624816349139045539995884502021477707e+1", "3.15218352423149291355910917552166128919594040e+1"}}, 20000},
    {{{"-2.50000000000000000000000000000000000000000000", "5.00000000000000000000000000000000000000000000e-1"}, {"-1.47477441771336130153910687086061919650498825e+8", "4.69608647456842471284438350564300164971969911e+7"}}, 3000},
}};

inline constexpr std::array<C, 13> kB22{{
    {"8.22467033424113218236207583323012594609474951e-1", "0.0"},
    {"-1.24565796073132699340295651150509320318432132e-1", "0.0"},
    {"-8.60475342729435128183596411390769738414535218e-2", "0.0"},
    {"-5.82111830279671214252736467254939838337143772e-2", "0.0"},
    {"-3.82502365925798587491050822932221367434102085e-2", "0.0"},
    {"-2.40763667667446835918791952391368106670118235e-2", "0.0"},
    {"-1.41379376938896526518045524308913438915339268e-2", "0.0"},
    {"-7.28411452771278147622710937029758982696879480e-3", "0.0"},
    {"-2.66314231320928664730641061252221597453970937e-3", "0.0"},
    {"3.53769830811389202230913862983034386898339534e-4", "0.0"},
    {"2.22938040012925974338993787313789398452817333e-3", "0.0"},
    {"3.30297671251429502525500581426542619339870711e-3", "0.0"},
    {"3.82217388853122798159370406250052133730535925e-3", "0.0"},
}};

inline constexpr std::array<C, 13> kA{{
    {"1.64493406684822643647241516664602518921894990", "0.0"},
    {"-1.60203563428518813807559592297747851910530295", "0.0"},
    {"2.37709974503642985948982636353620412079531640e-1", "0.0"},
    {"1.35629399829109432895354175078754725960728150e-1", "0.0"},
    {"7.21323244559635951470356537402283187797368251e-2", "0.0"},
    {"3.38726552129321018368396844580798592676067259e-2", "0.0"},
    {"1.18377966620904503422176387717057467976708013e-2", "0.0"},
    {"4.91663287102248497526953369157790693218069752e-6", "0.0"},
    {"-5.60013628492029536306787750012573374467930006e-3", "0.0"},
    {"-7.55883448784225491549402751675560106321355867e-3", "0.0"},
    {"-7.51481265529940457674633396017787477830137947e-3", "0.0"},
    {"-6.48729936285660113715092188076084823837321760e-3", "0.0"},
    {"-5.08556355972485929341383523354320547181070988e-3", "0.0"},
}};

inline constexpr std::array<C, 13> kD22{{
    {"-1.95446878089199961942854777132761417503901201e-1", "0.0"},
    {"-1.41025358532012968561738633084230672607582175e-1", "0.0"},
    {"-1.01158149686747985368902451102817770860213770e-1", "0.0"},
    {"-7.20711403997920747287417574007401330793034266e-2", "0.0"},
    {"-5.09511734876665888732878961486200679689198188e-2", "0.0"},
    {"-3.57037015178971192662234243447230665539677976e-2", "0.0"},
    {"-2.47712740941021635770391880346666822295652818e-2", "0.0"},
    {"-1.69976207441408640899553898235976230369062388e-2", "0.0"},
    {"-1.15259056478162454137299530353912614355333911e-2", "0.0"},
    {"-7.72258918941350048792460333683153135432544473e-3", "0.0"},
    {"-5.12047506706063368107025304563312790557022469e-3", "0.0"},
    {"-3.37612922121937831122335164566199517573899003e-3", "0.0"},
    {"-2.23806224389470618432264634035411788559091722e-3", "0.0"},
}};

inline constexpr std::array<C, 13> kDhat{{
    {"2.44226443117970656853925243026236429356407090e-1", "0.0"},
    {"1.12911637402187900725175633528642346538292455e-1", "0.0"},
    {"6.84324758263881722363827187052584376300518926e-2", "0.0"},
    {"4.62803229546487843330175483797029814166192965e-2", "0.0"},
    {"3.32281270273572279642951247447180035403162486e-2", "0.0"},
    {"2.47772576880657417481936605990204060171866757e-2", "0.0"},
    {"1.89679782480814384238947022527966851513554167e-2", "0.0"},
    {"1.48075208568776516215395308500611054673010737e-2", "0.0"},
    {"1.17387470237868878039151128832751894929622674e-2", "0.0"},
    {"9.42493431805372775993013712072558639130002492e-3", "0.0"},
    {"7.65083850728579592436300192354334768657691244e-3", "0.0"},
    {"6.27271304679545309841650322760880970496821536e-3", "0.0"},
    {"5.19114302163672172967781591330107703700252961e-3", "0.0"},
}};

inline constexpr std::array<C, 13> kBCritical{{
    {"6.04898643421630370247265914235955499759762545e-1", "0.0"},
    {"-3.49632705151170608891653995399768518729962040e-2", "-1.93514466045493766081002966304048191037490901e-1"},
    {"8.46762864704303944657467420694058886421746804e-2", "-5.36797566646114310331081971474192786304358855e-3"},
    {"-3.32741181492120978119701091673952443891441578e-2", "3.96467463900580138736902613581257711338427223e-2"},
    {"-2.52382091754674203086263306474499535813828271e-2", "-6.24592300229392472631970232925264463880799137e-2"},
    {"8.63244837417260918347366635456069230502430993e-2", "-1.95189087373888341765384514322733429467628159e-2"},
    {"1.51432745757372397030343633297178482310702256e-2", "1.18059727697108243051042635816197268691239817e-1"},
    {"-1.72927170319447034229309288937702324013287541e-1", "1.67418892286237404127225044776590787121154491e-2"},
    {"-4.03122994973944549266806216870766280924146974e-2", "-2.68299450062625813408253637305063433121524711e-1"},
    {"4.26052541557150878064247710005288053785709170e-1", "-1.21824155289438142543557757972633406507354886e-1"},
    {"3.40994652482747978904025466751695362381215846e-1", "6.67332897150179446273367505487282951148000897e-1"},
    {"-9.79723404585889948915189531239354068038234935e-1", "8.64011492435667202850866448579054926126025965e-1"},
    {"-1.99729541837659223614362207238227372818576253", "-1.21530216399682272985733536146086778424967828"},
}};

inline constexpr std::array<PointR, 3> kLogEtaSeries{{
    {"5.00000000000000000000000000000000000000000000e-1", "-5.01906436070940024846307514760930090415622059e-1"},
    {"-1.00000000000000000000000000000000000000000000", "-1.32979857135307904945579078474621310799362845"},
    {"9.00000000000000000000000000000000000000000000e-1", "-3.90114093778376445198808864726980912429588202e-1"},
}};

inline constexpr std::array<PointR, 3> kPsi2{{
    {"5.00000000000000000000000000000000000000000000", "1.10899363541051466835894574877584140450540629e-3"},
    {"1.50000000000000000000000000000000000000000000e+1", "5.26547718538124260154852248128229003024969487e-3"},
    {"2.50000000000000000000000000000000000000000000e+1", "2.58125008039760706407373809173656763536202563e-3"},
}};

inline constexpr std::array<PointR, 1> kInfBetaLimit{{
    {"1.00000000000000000000000000000000000000000000e+2", "5.71243764402068121945136490846391711091744122e-1"},
}};

inline constexpr const char* kEulerGamma = "5.77215664901532860606512090082402431042159336e-1";
inline constexpr const char* kOneMinusLn2 = "3.06852819440054690582767878541823431924499866e-1";
// sum over all nontrivial zeros of 1/(rho (1 - rho)).
inline constexpr const char* kSumRho = "4.61914179322420676286204958129905832438642543e-2";

}  // namespace oracles
