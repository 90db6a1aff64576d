#include "acceptance/table1_data.hpp"

// Frozen reference values for the first 80 periods of the interval
// recurrence: columns c_l_1, c_u_1, c_l_3, c_u_3, c_l_5, c_u_5 per row.
const double kReferenceTable[81][6] = {
    {0.5, 0.5, 0.5, 0.5, 0.5, 0.5},
    {0.475, 0.47625, 0.4625, 0.4679140625, 0.4375, 0.4581298828125},
    {0.45125, 0.4536875, 0.4304140625, 0.4401256227203369, 0.3956298828125, 0.427167293913044},
    {0.4286875, 0.432253125, 0.4026256227203369, 0.415809513909696, 0.364667293913044, 0.4029201579795064},
    {0.407253125, 0.41189046875, 0.378309513909696, 0.3943418006625074, 0.3404201579795064, 0.38319521251708305},
    {0.38689046875, 0.39254594531250003, 0.3568418006625074, 0.3752413900574983, 0.32069521251708305, 0.3667041957126408},
    {0.3675459453125, 0.37416864804687505, 0.3377413900574983, 0.35813100307380263, 0.3042041957126408, 0.3526286382685892},
    {0.34916864804687503, 0.3567102156445313, 0.32063100307380266, 0.3427103670539857, 0.2901286382685892, 0.3404179033516475},
    {0.3317102156445313, 0.3401247048623047, 0.30521036705398574, 0.3287373618304014, 0.2779179033516475, 0.3296849416774596},
    {0.3151247048623047, 0.32436846961918947, 0.29123736183040144, 0.3160144816915116, 0.2671849416774596, 0.3201480700149588},
    {0.29936846961918945, 0.30940004613823, 0.2785144816915116, 0.3043789342147279, 0.2576480700149588, 0.3115964049062649},
    {0.28440004613823, 0.2951800438313185, 0.2668789342147279, 0.29369527938558954, 0.24909640490626486, 0.30386831113365304},
    {0.2701800438313185, 0.2816710416397526, 0.25619527938558956, 0.28384987620867047, 0.241368311133653, 0.29683741375164874},
    {0.2566710416397526, 0.268837489557765, 0.24634987620867052, 0.2747466369824664, 0.23433741375164874, 0.2904032086307019},
    {0.24383748955776494, 0.2566456150798767, 0.23724663698246642, 0.26630374196854284, 0.2279032086307019, 0.28448457683091705},
    {0.2316456150798767, 0.24506333432588287, 0.2288037419685429, 0.2584510691177217, 0.22198457683091705, 0.2790151929249044},
    {0.22006333432588285, 0.23406016760958873, 0.22095106911772175, 0.2511281628760821, 0.21651519292490443, 0.2739402035975807},
    {0.2090601676095887, 0.2236071592291093, 0.2136281628760821, 0.2442826140800106, 0.21144020359758073, 0.2692137792672586},
    {0.19860715922910926, 0.21367680126765382, 0.2067826140800106, 0.23786875665714619, 0.20671377926725862, 0.2647972787503718},
    {0.1886768012676538, 0.20424296120427113, 0.2003687566571462, 0.23184661086049657, 0.20229727875037182, 0.26065785271652},
    {0.1792429612042711, 0.19528081314405757, 0.1943466108604966, 0.22618102008755236, 0.19815785271652, 0.25676736662721406},
    {0.17028081314405755, 0.1867667724868547, 0.1886810200875524, 0.22084094098636045, 0.19426736662721408, 0.2531015598999752},
    {0.16176677248685467, 0.17867843386251195, 0.18334094098636047, 0.21579885589009584, 0.1906015598999752, 0.2496393821883677},
    {0.15367843386251193, 0.17099451216938635, 0.17829885589009586, 0.21103028358833825, 0.18713938218836773, 0.2463624641540121},
    {0.14599451216938633, 0.16369478656091704, 0.17353028358833827, 0.2065133696900009, 0.18386246415401214, 0.2432546915548695},
    {0.13869478656091702, 0.15676004723287118, 0.16901336969000091, 0.20222854181990554, 0.18075469155486953, 0.24030185954935943},
    {0.13176004723287116, 0.15017204487122762, 0.16472854181990557, 0.1981582179463887, 0.17780185954935945, 0.23749138989398264},
    {0.1251720448712276, 0.14391344262766625, 0.1606582179463887, 0.19428655849733228, 0.17499138989398266, 0.23481209790126797},
    {0.11891344262766622, 0.13796777049628295, 0.1567865584973323, 0.19059925475851666, 0.172312097901268, 0.23225399909908556},
    {0.11296777049628291, 0.1323193819714688, 0.15309925475851668, 0.18708334748737468, 0.16975399909908556, 0.22980814781389072},
    {0.10731938197146877, 0.12695341287289535, 0.1495833474873747, 0.18372707081054537, 0.16730814781389072, 0.22746650161144188},
    {0.10195341287289533, 0.1218557422292506, 0.1462270708105454, 0.18051971737487055, 0.16496650161144188, 0.22522180682417325},
    {0.09685574222925057, 0.11701295511778806, 0.14301971737487057, 0.17745152144117238, 0.16272180682417325, 0.22306750138446313},
    {0.09201295511778804, 0.11241230736189865, 0.1399515214411724, 0.17451355718811754, 0.16056750138446313, 0.2209976319460385},
    {0.08741230736189863, 0.10804169199380372, 0.13701355718811756, 0.1716976499601163, 0.1584976319460385, 0.21900678286847072},
    {0.08304169199380369, 0.10388960739411353, 0.13419764996011632, 0.1689962985718936, 0.15650678286847072, 0.2170900151036049},
    {0.0788896073941135, 0.09994512702440786, 0.13149629857189363, 0.16640260709117732, 0.1545900151036049, 0.21524281338839488},
    {0.07494512702440784, 0.09619787067318747, 0.12890260709117735, 0.16391022477394196, 0.15274281338839488, 0.21346104043872052},
    {0.07119787067318745, 0.0926379771395281, 0.12641022477394198, 0.16151329303483217, 0.15096104043872052, 0.21174089707039276},
    {0.06763797713952807, 0.08925607828255169, 0.1240132930348322, 0.15920639850743068, 0.14924089707039276, 0.2100788873595957},
    {0.06425607828255167, 0.08604327436842411, 0.12170639850743073, 0.15698453139178326, 0.1475788873595957, 0.208471788105288},
    {0.061043274368424084, 0.0829911106500029, 0.1194845313917833, 0.15484304840549615, 0.145971788105288, 0.20691662197811622},
    {0.05799111065000288, 0.08009155511750277, 0.1173430484054962, 0.15277763975413194, 0.14441662197811622, 0.20541063383999505},
    {0.05509155511750274, 0.07733697736162763, 0.11527763975413201, 0.15078429962003942, 0.14291063383999505, 0.2039512698001972},
    {0.0523369773616276, 0.07472012849354626, 0.1132842996200395, 0.148859299738979, 0.1414512698001972, 0.20253615864110383},
    {0.04972012849354622, 0.07223412206886895, 0.11135929973897907, 0.14699916569322563, 0.14003615864110383, 0.20116309530246781},
    {0.04723412206886891, 0.06987241596542551, 0.1094991656932257, 0.14520065560009876, 0.13866309530246781, 0.19983002615933385},
    {0.04487241596542546, 0.06762879516715424, 0.10770065560009882, 0.1434607409175951, 0.13733002615933385, 0.19853503586738613},
    {0.04262879516715419, 0.06549735540879653, 0.10596074091759516, 0.14177658912522423, 0.13603503586738613, 0.19727633558184743},
    {0.04049735540879648, 0.06347248763835671, 0.1042765891252243, 0.1401455480692856, 0.13477633558184743, 0.19605225238325436},
    {0.03847248763835666, 0.06154886325643888, 0.10264554806928568, 0.138565131788519, 0.13355225238325436, 0.19486121976638196},
    {0.03654886325643883, 0.05972142009361694, 0.10106513178851907, 0.1370330076590044, 0.13236121976638196, 0.1937017690680174},
    {0.03472142009361689, 0.05798534908893609, 0.09953300765900447, 0.13554698471695728, 0.1312017690680174, 0.19257252172578224},
    {0.03298534908893604, 0.05633608163448929, 0.09804698471695736, 0.1341050030351442, 0.13007252172578224, 0.1914721822742598},
    {0.03133608163448924, 0.054769277552764825, 0.09660500303514427, 0.13270512404343116, 0.1289721822742598, 0.19039953199669632},
    {0.02976927755276478, 0.05328081367512658, 0.09520512404343123, 0.13134552169681238, 0.12789953199669632, 0.1893534231608392},
    {0.02828081367512654, 0.051866772991370255, 0.09384552169681247, 0.13002447440543036, 0.1268534231608392, 0.18833277377632338},
    {0.026866772991370212, 0.050523434341801746, 0.09252447440543043, 0.1287403576508302, 0.12583277377632338, 0.18733656281864094},
    {0.025523434341801703, 0.04924726262471166, 0.09124035765083026, 0.12749163722119247, 0.12483656281864094, 0.18636382587131584},
    {0.024247262624711618, 0.04803489949347608, 0.08999163722119255, 0.12627686300572985, 0.12386382587131585, 0.18541365114361122},
    {0.023034899493476035, 0.046883154518802275, 0.08877686300572994, 0.12509466329495914, 0.12291365114361123, 0.18448517582605053},
    {0.021883154518802232, 0.04578899679286216, 0.08759466329495923, 0.12394373953929555, 0.12198517582605055, 0.1835775827503444},
    {0.02078899679286212, 0.04474954695321906, 0.08644373953929564, 0.12282286152346492, 0.1210775827503444, 0.18269009732407562},
    {0.019749546953219014, 0.04376206960555811, 0.08532286152346501, 0.12173086291868206, 0.12019009732407564, 0.18182198471378214},
    {0.018762069605558065, 0.04282396612528021, 0.08423086291868215, 0.12066663717847818, 0.11932198471378216, 0.18097254725295675},
    {0.01782396612528016, 0.0419327678190162, 0.08316663717847828, 0.1196291337475417, 0.11847254725295678, 0.18014112205401098},
    {0.016932767819016155, 0.04108612942806539, 0.08212913374754177, 0.11861735455602346, 0.11764112205401099, 0.17932707880547316},
    {0.016086129428065348, 0.04028182295666212, 0.08111735455602354, 0.11763035077449831, 0.11682707880547319, 0.178529817737651},
    {0.01528182295666208, 0.03951773180882902, 0.08013035077449839, 0.11666721980721169, 0.11602981773765104, 0.17774876774171805},
    {0.014517731808828975, 0.03879184521838757, 0.07916721980721177, 0.11572710250341119, 0.11524876774171808, 0.17698338462871452},
    {0.013791845218387526, 0.03810225295746819, 0.07822710250341126, 0.1148091805684993, 0.11448338462871455, 0.17623314951630878},
    {0.01310225295746815, 0.037447140309594784, 0.07730918056849938, 0.11391267415847338, 0.1137331495163088, 0.17549756733236907},
    {0.012447140309594743, 0.036824783294115045, 0.07641267415847346, 0.11303683964266602, 0.1129975673323691, 0.17477616542546548},
    {0.011824783294115005, 0.036233544129409295, 0.0755368396426661, 0.11218096752118574, 0.1122761654254655, 0.17406849227337523},
    {0.011233544129409256, 0.03567186692293883, 0.07468096752118582, 0.11134438048470068, 0.11156849227337524, 0.17337411628151428},
    {0.010671866922938793, 0.0351382735767919, 0.07384438048470075, 0.11052643160532528, 0.1108741162815143, 0.17269262466397758},
    {0.010138273576791854, 0.0346313598979523, 0.07302643160532536, 0.10972650264837419, 0.11019262466397761, 0.1720236224005497},
    {0.00963135989795226, 0.03414979190305469, 0.07222650264837427, 0.10894400249565185, 0.10952362240054973, 0.1713667312636564},
    {0.009149791903054648, 0.03369230230790196, 0.07144400249565193, 0.10817836567176205, 0.10886673126365642, 0.17072158890977368},
    {0.008692302307901915, 0.033257687192506866, 0.07067836567176213, 0.10742905096565734, 0.10822158890977371, 0.1700878480303016},
    {0.00825768719250682, 0.03284480283288153, 0.06992905096565742, 0.10669554014031371, 0.10758784803030164, 0.16946517555735155},
};
