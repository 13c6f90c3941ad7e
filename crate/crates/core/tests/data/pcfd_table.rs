// (Re nu, Im nu, Re z, Im z, Re D, Im D), computed with 40-digit arithmetic.
pub const PCFD: &[(f64, f64, f64, f64, f64, f64)] = &[
    (-0.0, -0.3, 0.3535533905932738, 0.35355339059327373, 1.1369938998869071, -0.019797031796572815),
    (-0.0, -0.3, 2.121320343559643, 2.1213203435596424, -1.0597441390637835, -0.65730785655023465),
    (-0.0, -0.3, 4.949747468305833, 4.949747468305832, 1.2167077156554257, -0.33464460638008505),
    (-0.0, -0.3, 8.485281374238571, 8.48528137423857, 0.73205380255506015, 1.0309019951563748),
    (-0.0, -0.3, 21.213203435596427, 21.213203435596423, 1.2463158726268414, 0.21941043970349582),
    (-0.0, -0.3, 63.63961030678928, 63.63961030678927, -1.2653434186720249, 0.02871163867890196),
    (-0.0, -0.3, -0.35355339059327373, -0.3535533905932738, 0.88056413451576511, 0.25783008942659803),
    (-0.0, -0.3, -2.1213203435596424, -2.121320343559643, -0.60328045022769989, -0.31546812783609045),
    (-0.0, -0.3, -4.949747468305832, -4.949747468305833, 0.50709272817705281, -0.046343820881483518),
    (-0.0, -0.3, -8.48528137423857, -8.485281374238571, 0.33828189977647211, 0.40106704390027003),
    (-0.0, -0.3, -21.213203435596423, -21.213203435596427, 0.50086935600821635, 0.10034668418915133),
    (-0.0, -0.3, -63.63961030678927, -63.63961030678928, -0.49706054397549104, 0.0053333262836141061),
    (-0.0, -0.3, -0.35355339059327373, 0.3535533905932738, 1.1994806509709911, 0.40020434862042791),
    (-0.0, -0.3, -2.1213203435596424, 2.121320343559643, -0.44620941696971907, 2.1626910104229328),
    (-0.0, -0.3, -4.949747468305832, 4.949747468305833, 1.1245465337750896, -1.6355419026637678),
    (-0.0, -0.3, -8.48528137423857, 8.485281374238571, -1.534132772543553, -1.3860739538404088),
    (-0.0, -0.3, -21.213203435596423, 21.213203435596427, -1.217102723781725, -1.6556290534509752),
    (-0.0, -0.3, -63.63961030678927, 63.63961030678928, 1.80761922754212, 0.918204839563305),
    (-0.0, -0.3, 0.3535533905932738, -0.35355339059327373, 0.92602631030566306, 0.12564915826868492),
    (-0.0, -0.3, 2.121320343559643, -2.1213203435596424, -0.27700220700216372, 0.75446708600316581),
    (-0.0, -0.3, 4.949747468305833, -4.949747468305832, 0.49307232804768208, -0.62047807575313785),
    (-0.0, -0.3, 8.485281374238571, -8.48528137423857, -0.60628835843299434, -0.50788896278387632),
    (-0.0, -0.3, 21.213203435596427, -21.213203435596423, -0.47455957434393084, -0.63184644274445161),
    (-0.0, -0.3, 63.63961030678928, -63.63961030678927, 0.70641943475470649, 0.35386881465896471),
    (-0.0, -0.3, 0.4900332889206208, 0.09933466539753061, 0.99697259522058069, 0.0045309972972677553),
    (-0.0, -0.3, 2.940199733523725, 0.5960079923851836, 0.045760577601859082, -0.1254047939572757),
    (-0.0, -0.3, 6.860466044888692, 1.3906853155654284, 8.0298024681337646e-6, 1.0676452597791882e-5),
    (-0.0, -0.3, 11.7607989340949, 2.3840319695407346, -2.4824199585701434e-15, -3.4159159793493629e-15),
    (-0.0, -0.3, 29.401997335237247, 5.960079923851836, 8.2391228793423128e-91, -6.5956732105688213e-91),
    (-0.0, -0.3, -0.4854790825747953, 0.11962466460699121, 1.0321922436925455, 0.42978131942570548),
    (-0.0, -0.3, -2.9128744954487718, 0.7177479876419472, 0.89282924827064072, 2.5795008203424245),
    (-0.0, -0.3, -6.796707156047134, 1.674745304497877, -6526.7426204379737, -69.564118043437906),
    (-0.0, -0.3, -11.651497981795087, 2.870991950567789, 674216479585.18525, -5057140097109.0566),
    (-0.0, -0.3, -29.128744954487715, 7.177479876419473, 5.2303516641465525e+84, -8.3075869413700678e+84),
    (-0.0, -1.0, 0.3535533905932738, 0.35355339059327373, 1.7592922563206894, -0.11512314103149169),
    (-0.0, -1.0, 2.121320343559643, 2.1213203435596424, -2.0295026929238009, 0.54392403418194673),
    (-0.0, -1.0, 4.949747468305833, 4.949747468305832, -0.14979168385270146, -2.1669446901036903),
    (-0.0, -1.0, 8.485281374238571, 8.48528137423857, 1.5395923235868209, -1.5515844494453863),
    (-0.0, -1.0, 21.213203435596427, 21.213203435596423, -1.3025519951815293, -1.7630962790729966),
    (-0.0, -1.0, 63.63961030678928, 63.63961030678927, 2.1920898189935248, -0.068014265005306572),
    (-0.0, -1.0, -0.35355339059327373, -0.3535533905932738, 0.86615413550218458, 1.0316704312162329),
    (-0.0, -1.0, -2.1213203435596424, -2.121320343559643, -0.27090701488659889, -0.57769373076233082),
    (-0.0, -1.0, -4.949747468305832, -4.949747468305833, -0.28205315423637065, 0.03392598423677249),
    (-0.0, -1.0, -8.48528137423857, -8.485281374238571, 0.013340219728782926, 0.10565811583657433),
    (-0.0, -1.0, -21.213203435596423, -21.213203435596427, -0.12837343258826082, -0.087189746000033643),
    (-0.0, -1.0, -63.63961030678927, -63.63961030678928, 0.10537967503367101, 0.018949560233967105),
    (-0.0, -1.0, -0.35355339059327373, 0.3535533905932738, 2.2012397282905145, 1.3068899018368633),
    (-0.0, -1.0, -2.1213203435596424, 2.121320343559643, 3.9735000334911327, 14.58855417484392),
    (-0.0, -1.0, -4.949747468305832, 4.949747468305833, -6.3791831270732518, -9.7980864935404784),
    (-0.0, -1.0, -8.48528137423857, 8.485281374238571, -4.6183987721119731, 9.5988999578302334),
    (-0.0, -1.0, -21.213203435596423, 21.213203435596427, -1.0344581239273907, 10.774869534095327),
    (-0.0, -1.0, -63.63961030678927, 63.63961030678928, -9.4033236621126204, -4.7426589926564509),
    (-0.0, -1.0, 0.3535533905932738, -0.35355339059327373, 0.99629840097541443, 0.28499501508667752),
    (-0.0, -1.0, 2.121320343559643, -2.1213203435596424, 0.17798410140975256, 0.45503839470969149),
    (-0.0, -1.0, 4.949747468305833, -4.949747468305832, -0.290293883674369, -0.35793656881794035),
    (-0.0, -1.0, 8.485281374238571, -8.48528137423857, -0.23202936578657558, 0.39435512326961644),
    (-0.0, -1.0, 21.213203435596427, -21.213203435596423, -0.053287131228101569, 0.45306931770119302),
    (-0.0, -1.0, 63.63961030678928, -63.63961030678927, -0.40934085190529607, -0.20086143722610363),
    (-0.0, -1.0, 0.4900332889206208, 0.09933466539753061, 1.3425425319892885, -0.039902978831242448),
    (-0.0, -1.0, 2.940199733523725, 0.5960079923851836, -0.070854988364180056, -0.1405530901193063),
    (-0.0, -1.0, 6.860466044888692, 1.3906853155654284, 1.3939180858542785e-5, -6.6656924917900063e-6),
    (-0.0, -1.0, 11.7607989340949, 2.3840319695407346, -3.3888296836930548e-15, 3.4927870955749669e-15),
    (-0.0, -1.0, 29.401997335237247, 5.960079923851836, -1.2099763149165278e-90, -1.0326193804498526e-91),
    (-0.0, -1.0, -0.4854790825747953, 0.11962466460699121, 1.5936248412920173, 1.5515551279884729),
    (-0.0, -1.0, -2.9128744954487718, 0.7177479876419472, -5.7875824274007428, 16.463652952744979),
    (-0.0, -1.0, -6.796707156047134, 1.674745304497877, -3874.7479607594077, -45911.183105606789),
    (-0.0, -1.0, -11.651497981795087, 2.870991950567789, 32654959446437.85, 15050900074581.181),
    (-0.0, -1.0, -29.128744954487715, 7.177479876419473, 4.2373220208381519e+84, 6.9019560811847433e+85),
    (0.125, -5.0, 0.3535533905932738, 0.35355339059327373, -35.463926539025564, -23.27311220921824),
    (0.125, -5.0, 2.121320343559643, 2.1213203435596424, -36.918451622963348, -38.840494526417881),
    (0.125, -5.0, 4.949747468305833, 4.949747468305832, -62.345738850129537, 7.8031118665734274),
    (0.125, -5.0, 8.485281374238571, 8.48528137423857, -19.16681906664405, 65.686330237770038),
    (0.125, -5.0, 21.213203435596427, 21.213203435596423, -77.471332923934203, 1.4762958112266697),
    (0.125, -5.0, 63.63961030678928, 63.63961030678927, 54.234185365882376, 70.633967597295698),
    (0.125, -5.0, -0.35355339059327373, -0.3535533905932738, 34.981330262390885, -11.641526467451984),
    (0.125, -5.0, -2.1213203435596424, -2.121320343559643, 21.011163699789183, -12.373893924975011),
    (0.125, -5.0, -4.949747468305832, -4.949747468305833, 12.279875951430893, 5.6009226285203725),
    (0.125, -5.0, -8.48528137423857, -8.485281374238571, -0.2409158853828776, 8.0384602831204988),
    (0.125, -5.0, -21.213203435596423, -21.213203435596427, 2.8278658951289094, 0.99773994375603293),
    (0.125, -5.0, -63.63961030678927, -63.63961030678928, -0.72749123407723482, 0.49202560358505012),
    (0.125, -5.0, -0.35355339059327373, 0.3535533905932738, 24.03617462572, -118.96221790903845),
    (0.125, -5.0, -2.1213203435596424, 2.121320343559643, 11647.378453996872, -18134.906086025704),
    (0.125, -5.0, -4.949747468305832, 4.949747468305833, -211000.56110961807, 41563.907884527345),
    (0.125, -5.0, -8.48528137423857, 8.485281374238571, 92163.925817641659, -159367.27379429079),
    (0.125, -5.0, -21.213203435596423, 21.213203435596427, 113487.93731214582, 156263.08009506379),
    (0.125, -5.0, -63.63961030678927, 63.63961030678928, 9035.3600977955391, -227959.66425193253),
    (0.125, -5.0, 0.3535533905932738, -0.35355339059327373, 0.76250306086242186, -13.026447312553826),
    (0.125, -5.0, 2.121320343559643, -2.1213203435596424, -0.036179781329224792, -0.094718869926412312),
    (0.125, -5.0, 4.949747468305833, -4.949747468305832, -0.024066655264934133, 0.011158024711967433),
    (0.125, -5.0, 8.485281374238571, -8.48528137423857, 0.00015221636153557003, -0.027270811743520735),
    (0.125, -5.0, 21.213203435596427, -21.213203435596423, 0.025515475626536612, 0.01616617754407033),
    (0.125, -5.0, 63.63961030678928, -63.63961030678927, -0.012216048581511351, -0.032357626214376693),
    (0.125, -5.0, 0.4900332889206208, 0.09933466539753061, -16.797924750142243, -15.141036647810142),
    (0.125, -5.0, 2.940199733523725, 0.5960079923851836, 0.56854980940130532, -0.57964059871293531),
    (0.125, -5.0, 6.860466044888692, 1.3906853155654284, -2.4481974422160992e-5, -4.7181717197206013e-5),
    (0.125, -5.0, 11.7607989340949, 2.3840319695407346, 3.739117845928338e-15, -1.5408480428248884e-14),
    (0.125, -5.0, 29.401997335237247, 5.960079923851836, -2.4842035903445563e-90, 3.3655334763785616e-90),
    (0.125, -5.0, -0.4854790825747953, 0.11962466460699121, 69.259446401582313, -71.729597863837367),
    (0.125, -5.0, -2.9128744954487718, 0.7177479876419472, -4240.4473837060058, 9867.0136578504227),
    (0.125, -5.0, -6.796707156047134, 1.674745304497877, -48720708.32862663, 104456054.07751835),
    (0.125, -5.0, -11.651497981795087, 2.870991950567789, 95329950630269934.0, 12549340448359952.0),
    (0.125, -5.0, -29.128744954487715, 7.177479876419473, 3.9239825047661128e+88, -1.6827196833176619e+89),
    (-0.5, -20.0, 0.3535533905932738, 0.35355339059327373, -1833928.9670238302, 1246058.1993188654),
    (-0.5, -20.0, 2.121320343559643, 2.1213203435596424, -1848181.7208876546, -1118925.7811714524),
    (-0.5, -20.0, 4.949747468305833, 4.949747468305832, -716441.70032560258, 1833979.4920460261),
    (-0.5, -20.0, 8.485281374238571, 8.48528137423857, 1371415.0183905416, 1030128.1370554126),
    (-0.5, -20.0, 21.213203435596427, 21.213203435596423, -124500.99384249037, 1179420.3938635141),
    (-0.5, -20.0, 63.63961030678928, 63.63961030678927, -302974.0684919984, 628527.97271342075),
    (-0.5, -20.0, -0.35355339059327373, -0.3535533905932738, 1644224.9146470035, 1487441.0651292777),
    (-0.5, -20.0, -2.1213203435596424, -2.121320343559643, 1985026.0138166725, -852902.28142764912),
    (-0.5, -20.0, -4.949747468305832, -4.949747468305833, 456238.41355796555, 1915363.1502158934),
    (-0.5, -20.0, -8.48528137423857, -8.485281374238571, -1500563.8355222724, 830813.64152442211),
    (-0.5, -20.0, -21.213203435596423, -21.213203435596427, -39610.728076841088, 1185311.7535695649),
    (-0.5, -20.0, -63.63961030678927, -63.63961030678928, 213248.45954621228, 664353.66572557134),
    (-0.5, -20.0, -0.35355339059327373, 0.3535533905932738, 1436320.0630808322, -20696341.415757639),
    (-0.5, -20.0, -2.1213203435596424, 2.121320343559643, 82010089476.225254, -1181706539485.4816),
    (-0.5, -20.0, -4.949747468305832, 4.949747468305833, 2.0961070831515825e+17, -3.0203398916424285e+18),
    (-0.5, -20.0, -8.48528137423857, 8.485281374238571, 9.6593730813555852e+18, -1.3918463460371977e+20),
    (-0.5, -20.0, -21.213203435596423, 21.213203435596427, 6.8184114399843936e+18, -9.8248416005762778e+19),
    (-0.5, -20.0, -63.63961030678927, 63.63961030678928, 4.2385521820241423e+18, -6.107449538752389e+19),
    (-0.5, -20.0, 0.3535533905932738, -0.35355339059327373, 16456.766643573037, -237130.19807317955),
    (-0.5, -20.0, 2.121320343559643, -2.1213203435596424, 0.30549886972810771, -4.402019488928671),
    (-0.5, -20.0, 4.949747468305833, -4.949747468305832, 1.8270932034035843e-7, -2.6214323071211861e-6),
    (-0.5, -20.0, 8.485281374238571, -8.48528137423857, 3.3177155558127563e-8, 4.1653605934186048e-8),
    (-0.5, -20.0, 21.213203435596427, -21.213203435596423, 2.4495500790145416e-8, 1.3895009162494832e-8),
    (-0.5, -20.0, 63.63961030678928, -63.63961030678927, 1.5606955133204032e-8, 3.1659061802222767e-9),
    (-0.5, -20.0, 0.4900332889206208, 0.09933466539753061, -628338.24128526464, 142115.63066907573),
    (-0.5, -20.0, 2.940199733523725, 0.5960079923851836, 1033.8515136821565, -50.436989495150836),
    (-0.5, -20.0, 6.860466044888692, 1.3906853155654284, -0.001276144337352131, -0.0027358112243746202),
    (-0.5, -20.0, 11.7607989340949, 2.3840319695407346, -2.7076768171239968e-14, -1.7983875689282259e-13),
    (-0.5, -20.0, 29.401997335237247, 5.960079923851836, 4.0419806228573688e-90, 1.1297273435925278e-89),
    (-0.5, -20.0, -0.4854790825747953, 0.11962466460699121, 14151939.782709532, -5089428.14861425),
    (-0.5, -20.0, -2.9128744954487718, 0.7177479876419472, 106093878383.43767, -194299957157.71805),
    (-0.5, -20.0, -6.796707156047134, 1.674745304497877, 9.201181952043449e+17, -1.3326547311294388e+18),
    (-0.5, -20.0, -11.651497981795087, 2.870991950567789, 1.1183291359168278e+28, -2.70748746950192e+28),
    (-0.5, -20.0, -29.128744954487715, 7.177479876419473, 1.452989155081256e+101, -2.4186603833415617e+101),
    (1.25, -50.0, 0.3535533905932738, 0.35355339059327373, 9.8234785443778804e+17, 48006174172893354.0),
    (1.25, -50.0, 2.121320343559643, 2.1213203435596424, 6.446100721906124e+17, 1.1544559950640228e+18),
    (1.25, -50.0, 4.949747468305833, 4.949747468305832, -1.4823500236947997e+18, 1.3668305191942537e+18),
    (1.25, -50.0, 8.485281374238571, 8.48528137423857, -2.6671647852541947e+18, -1.5953322823378617e+18),
    (1.25, -50.0, 21.213203435596427, 21.213203435596423, 7.4814867112216035e+18, 3.5641826802749936e+18),
    (1.25, -50.0, 63.63961030678928, 63.63961030678927, 3.0837685327812138e+19, 6.8391142417487907e+18),
    (1.25, -50.0, -0.35355339059327373, -0.3535533905932738, 5.8066361829102177e+17, 6.4662339219538226e+17),
    (1.25, -50.0, -2.1213203435596424, -2.121320343559643, 6.2334987172906478e+17, -1.0886409094166004e+17),
    (1.25, -50.0, -4.949747468305832, -4.949747468305833, 24854582830890660.0, -3.7938073572818502e+17),
    (1.25, -50.0, -8.48528137423857, -8.485281374238571, -1.9670339853651794e+17, -73181208474761127.0),
    (1.25, -50.0, -21.213203435596423, -21.213203435596427, 39490147645246942.0, 19448504438749536.0),
    (1.25, -50.0, -63.63961030678927, -63.63961030678928, 3251353263278322.6, 2665614232833618.4),
    (1.25, -50.0, -0.35355339059327373, 0.3535533905932738, -2.7760622213377372e+19, -1.5376098942565803e+19),
    (1.25, -50.0, -2.1213203435596424, 2.121320343559643, -8.9228471419241208e+26, -9.5165091840928237e+26),
    (1.25, -50.0, -4.949747468305832, 4.949747468305833, -8.4832055275679625e+37, -3.7309784853421353e+38),
    (1.25, -50.0, -8.48528137423857, 8.485281374238571, 4.2429023551674089e+49, -5.8802800708919286e+49),
    (1.25, -50.0, -21.213203435596423, 21.213203435596427, -9.3445495395567615e+52, 3.1523415782515407e+52),
    (1.25, -50.0, -63.63961030678927, 63.63961030678928, 3.9726096145941315e+53, -6.5781665078832001e+52),
    (1.25, -50.0, 0.3535533905932738, -0.35355339059327373, -25023758652186723.0, -10054590256624681.0),
    (1.25, -50.0, 2.121320343559643, -2.1213203435596424, -669259326.9758558, -46583465.832382511),
    (1.25, -50.0, 4.949747468305833, -4.949747468305832, -0.0022990235741297297, 0.0011534089368223928),
    (1.25, -50.0, 8.485281374238571, -8.48528137423857, -4.7984267718395225e-15, 2.1738126932263863e-14),
    (1.25, -50.0, 21.213203435596427, -21.213203435596423, 2.6014123198168718e-16, -5.3240279330099641e-16),
    (1.25, -50.0, 63.63961030678928, -63.63961030678927, -1.4159005804190954e-15, 1.9781200513458397e-15),
    (1.25, -50.0, 0.4900332889206208, 0.09933466539753061, 1.1346227442546866e+17, 78389224709279555.0),
    (1.25, -50.0, 2.940199733523725, 0.5960079923851836, -1080344181353.5528, -8642623131269.524),
    (1.25, -50.0, 6.860466044888692, 1.3906853155654284, 343484.25657403426, -22550.816487730739),
    (1.25, -50.0, 11.7607989340949, 2.3840319695407346, -6.1808266354778637e-7, 5.5776190694810853e-7),
    (1.25, -50.0, 29.401997335237247, 5.960079923851836, 4.9504571398095093e-84, -1.9169299723630444e-84),
    (1.25, -50.0, -0.4854790825747953, 0.11962466460699121, 1.2656299255061196e+19, -1.344641974921804e+19),
    (1.25, -50.0, -2.9128744954487718, 0.7177479876419472, -3.3183271865385042e+25, 4.9172107349235402e+25),
    (1.25, -50.0, -6.796707156047134, 1.674745304497877, -1.6823712327513481e+36, 5.6461901304392123e+35),
    (1.25, -50.0, -11.651497981795087, 2.870991950567789, 5.0767375812483268e+49, 5.6210472106519992e+49),
    (1.25, -50.0, -29.128744954487715, 7.177479876419473, -5.0382940540174307e+124, -8.7004377154792056e+124),
    (0.5, 0.5, 0.3535533905932738, 0.35355339059327373, 0.70332956899189235, -0.17366875514969009),
    (0.5, 0.5, 2.121320343559643, 2.1213203435596424, 0.2725237879931429, -1.1414138182212015),
    (0.5, 0.5, 4.949747468305833, 4.949747468305832, -0.18917550870560542, 1.7766453933931409),
    (0.5, 0.5, 8.485281374238571, 8.48528137423857, -2.2965949446987047, -0.4438951467582315),
    (0.5, 0.5, 21.213203435596427, 21.213203435596423, -3.6589981698278848, -0.53840940571056938),
    (0.5, 0.5, 63.63961030678928, 63.63961030678927, 4.3314311213879433, 4.7194423666769186),
    (0.5, 0.5, -0.35355339059327373, -0.3535533905932738, 0.58382551246420249, -1.1134999717878553),
    (0.5, 0.5, -2.1213203435596424, -2.121320343559643, -5.9349971811868455, -1.4742914618024155),
    (0.5, 0.5, -4.949747468305832, -4.949747468305833, 8.6474850761538453, 0.99030838297015059),
    (0.5, 0.5, -8.48528137423857, -8.485281374238571, -2.1025653687252312, 11.00131615079112),
    (0.5, 0.5, -21.213203435596423, -21.213203435596427, -2.5811112708502766, 17.590340567394302),
    (0.5, 0.5, -63.63961030678927, -63.63961030678928, 22.702793897795492, -20.833503623234521),
    (0.5, 0.5, -0.35355339059327373, 0.3535533905932738, 0.23746399383877585, -0.39056190329634606),
    (0.5, 0.5, -2.1213203435596424, 2.121320343559643, -0.37055822594533319, -0.22742814154522292),
    (0.5, 0.5, -4.949747468305832, 4.949747468305833, -0.26337777490115618, 0.75389845034390541),
    (0.5, 0.5, -8.48528137423857, 8.485281374238571, 0.80237644536463366, 0.68037006026756906),
    (0.5, 0.5, -21.213203435596423, 21.213203435596427, -0.19592413308937955, 1.6711578815155611),
    (0.5, 0.5, -63.63961030678927, 63.63961030678928, 1.4776252910731813, -2.5196392532051863),
    (0.5, 0.5, 0.3535533905932738, -0.35355339059327373, 1.1453564481152797, -0.42973514595542126),
    (0.5, 0.5, 2.121320343559643, -2.1213203435596424, -1.9513249010414935, 1.6742465014607614),
    (0.5, 0.5, 4.949747468305833, -4.949747468305832, 3.7778205282899315, 1.0411969567377273),
    (0.5, 0.5, 8.485281374238571, -8.48528137423857, 3.3950460923019594, -3.8462511931754682),
    (0.5, 0.5, 21.213203435596427, -21.213203435596423, 8.0594262949793833, 0.9187436223435909),
    (0.5, 0.5, 63.63961030678928, -63.63961030678927, -12.122392583421225, -7.1023097738469494),
    (0.5, 0.5, 0.4900332889206208, 0.09933466539753061, 0.84886690819823304, -0.2048501833649098),
    (0.5, 0.5, 2.940199733523725, 0.5960079923851836, 0.19659827942216413, -0.04709681639027247),
    (0.5, 0.5, 6.860466044888692, 1.3906853155654284, -2.5682512573804459e-5, 1.6019767314201913e-5),
    (0.5, 0.5, 11.7607989340949, 2.3840319695407346, 1.2409555825968566e-14, -1.3818875087697848e-15),
    (0.5, 0.5, 29.401997335237247, 5.960079923851836, -2.6803007677667045e-90, 4.1345102757927078e-90),
    (0.5, 0.5, -0.4854790825747953, 0.11962466460699121, 0.18354625922355633, -0.6504784391849795),
    (0.5, 0.5, -2.9128744954487718, 0.7177479876419472, -1.2859409725995144, 1.6944903754509661),
    (0.5, 0.5, -6.796707156047134, 1.674745304497877, -3976.6288992594287, -212.38660110358282),
    (0.5, 0.5, -11.651497981795087, 2.870991950567789, -658155277924.76462, -2286954583146.2717),
    (0.5, 0.5, -29.128744954487715, 7.177479876419473, -1.6203171700350202e+84, -2.4003007691778964e+84),
    (3.0, 0.0, 0.3535533905932738, 0.35355339059327373, -1.2075324493815097, -0.89860468710701233),
    (3.0, 0.0, 2.121320343559643, 2.1213203435596424, 25.893944830052673, 11.811165105026162),
    (3.0, 0.0, 4.949747468305833, 4.949747468305832, -315.4512391239974, 136.31036547208736),
    (3.0, 0.0, 8.485281374238571, 8.48528137423857, -1026.9749280907, -1390.1807425917886),
    (3.0, 0.0, 21.213203435596427, 21.213203435596423, -24734.266287346101, -10827.011186223046),
    (3.0, 0.0, 63.63961030678928, 63.63961030678927, 624430.88291054531, 376200.93748861988),
    (3.0, 0.0, -0.35355339059327373, -0.3535533905932738, 1.2075324493815096, 0.89860468710701256),
    (3.0, 0.0, -2.1213203435596424, -2.121320343559643, -25.893944830052694, -11.811165105026189),
    (3.0, 0.0, -4.949747468305832, -4.949747468305833, 315.45123912399887, -136.31036547208779),
    (3.0, 0.0, -8.48528137423857, -8.485281374238571, 1026.9749280907146, 1390.1807425918102),
    (3.0, 0.0, -21.213203435596423, -21.213203435596427, 24734.26628734796, 10827.011186223874),
    (3.0, 0.0, -63.63961030678927, -63.63961030678928, -624430.88291082754, -376200.9374887902),
    (3.0, 0.0, -0.35355339059327373, 0.3535533905932738, 1.2075324493815096, -0.89860468710701256),
    (3.0, 0.0, -2.1213203435596424, 2.121320343559643, -25.893944830052694, 11.811165105026189),
    (3.0, 0.0, -4.949747468305832, 4.949747468305833, 315.45123912399887, 136.31036547208779),
    (3.0, 0.0, -8.48528137423857, 8.485281374238571, 1026.9749280907146, -1390.1807425918102),
    (3.0, 0.0, -21.213203435596423, 21.213203435596427, 24734.26628734796, -10827.011186223874),
    (3.0, 0.0, -63.63961030678927, 63.63961030678928, -624430.88291082754, 376200.9374887902),
    (3.0, 0.0, 0.3535533905932738, -0.35355339059327373, -1.2075324493815097, 0.89860468710701233),
    (3.0, 0.0, 2.121320343559643, -2.1213203435596424, 25.893944830052673, -11.811165105026162),
    (3.0, 0.0, 4.949747468305833, -4.949747468305832, -315.4512391239974, -136.31036547208736),
    (3.0, 0.0, 8.485281374238571, -8.48528137423857, -1026.9749280907, 1390.1807425917886),
    (3.0, 0.0, 21.213203435596427, -21.213203435596423, -24734.266287346101, 10827.011186223046),
    (3.0, 0.0, 63.63961030678928, -63.63961030678927, 624430.88291054531, -376200.93748861988),
    (3.0, 0.0, 0.4900332889206208, 0.09933466539753061, -1.2953085403735959, -0.1832327675024047),
    (3.0, 0.0, 2.940199733523725, 0.5960079923851836, 2.3864089690206037, -0.21781558851788543),
    (3.0, 0.0, 6.860466044888692, 1.3906853155654284, -0.0021894117134642003, 0.0034363567794129784),
    (3.0, 0.0, 11.7607989340949, 2.3840319695407346, 4.4771266624162611e-12, -5.0394492904971464e-12),
    (3.0, 0.0, 29.401997335237247, 5.960079923851836, 1.5632785287822218e-86, 2.1712021622389218e-86),
    (3.0, 0.0, -0.4854790825747953, 0.11962466460699121, 1.296516748778157, -0.22359425480860559),
    (3.0, 0.0, -2.9128744954487718, 0.7177479876419472, -2.6425423236877647, -0.27659392985392635),
    (3.0, 0.0, -6.796707156047134, 1.674745304497877, -0.0014031584491020181, 0.0061549085334492241),
    (3.0, 0.0, -11.651497981795087, 2.870991950567789, 2.3286027702750113e-11, 6.7736279572408817e-12),
    (3.0, 0.0, -29.128744954487715, 7.177479876419473, 7.8770187717324851e-83, 1.0827563553464539e-83),
    (-2.5, 0.0, 0.3535533905932738, 0.35355339059327373, 0.4256746722691932, -0.24169352641042335),
    (-2.5, 0.0, 2.121320343559643, 2.1213203435596424, -0.04371657865698085, 0.034891380365172349),
    (-2.5, 0.0, 4.949747468305833, 4.949747468305832, 9.1223499553320734e-5, -0.0076586305413962606),
    (-2.5, 0.0, 8.485281374238571, 8.48528137423857, 0.0019483941720439217, -0.00046452420229076552),
    (-2.5, 0.0, 21.213203435596427, 21.213203435596423, 0.00014648215861594707, -0.00014033339802477404),
    (-2.5, 0.0, 63.63961030678928, 63.63961030678927, -1.0471430762248771e-5, 7.7265726900525905e-6),
    (-2.5, 0.0, -0.35355339059327373, -0.3535533905932738, 1.1770379159314238, 0.64659251237363903),
    (-2.5, 0.0, -2.1213203435596424, -2.121320343559643, -9.5406842666070929, -2.4198812823799634),
    (-2.5, 0.0, -4.949747468305832, -4.949747468305833, 22.948593413074911, 26.330096620099472),
    (-2.5, 0.0, -8.48528137423857, -8.485281374238571, 67.881933370950433, -39.191242280126397),
    (-2.5, 0.0, -21.213203435596423, -21.213203435596427, 309.79408754919716, -5.2639078991820175),
    (-2.5, 0.0, -63.63961030678927, -63.63961030678928, -1592.0801580787432, 239.33405491299865),
    (-2.5, 0.0, -0.35355339059327373, 0.3535533905932738, 1.1770379159314238, -0.64659251237363903),
    (-2.5, 0.0, -2.1213203435596424, 2.121320343559643, -9.5406842666070929, 2.4198812823799634),
    (-2.5, 0.0, -4.949747468305832, 4.949747468305833, 22.948593413074911, -26.330096620099472),
    (-2.5, 0.0, -8.48528137423857, 8.485281374238571, 67.881933370950433, 39.191242280126397),
    (-2.5, 0.0, -21.213203435596423, 21.213203435596427, 309.79408754919716, 5.2639078991820175),
    (-2.5, 0.0, -63.63961030678927, 63.63961030678928, -1592.0801580787432, -239.33405491299865),
    (-2.5, 0.0, 0.3535533905932738, -0.35355339059327373, 0.4256746722691932, 0.24169352641042335),
    (-2.5, 0.0, 2.121320343559643, -2.1213203435596424, -0.04371657865698085, -0.034891380365172349),
    (-2.5, 0.0, 4.949747468305833, -4.949747468305832, 9.1223499553320734e-5, 0.0076586305413962606),
    (-2.5, 0.0, 8.485281374238571, -8.48528137423857, 0.0019483941720439217, 0.00046452420229076552),
    (-2.5, 0.0, 21.213203435596427, -21.213203435596423, 0.00014648215861594707, 0.00014033339802477404),
    (-2.5, 0.0, 63.63961030678928, -63.63961030678927, -1.0471430762248771e-5, -7.7265726900525905e-6),
    (-2.5, 0.0, 0.4900332889206208, 0.09933466539753061, 0.39360947662664216, -0.058286929929105357),
    (-2.5, 0.0, 2.940199733523725, 0.5960079923851836, 0.0017206831339831698, -0.0054540088813039443),
    (-2.5, 0.0, 6.860466044888692, 1.3906853155654284, 4.5227390619806775e-8, 7.7616451275118546e-8),
    (-2.5, 0.0, 11.7607989340949, 2.3840319695407346, -2.809781053140219e-18, -7.2307449296770395e-18),
    (-2.5, 0.0, 29.401997335237247, 5.960079923851836, 1.9840137216218576e-94, -3.0524449670862403e-95),
    (-2.5, 0.0, -0.4854790825747953, 0.11962466460699121, 1.5971306550130157, -0.27507262657440157),
    (-2.5, 0.0, -2.9128744954487718, 0.7177479876419472, 13.541416963319643, -73.310118174369877),
    (-2.5, 0.0, -6.796707156047134, 1.674745304497877, 1758767.6571729633, 417328.862876633),
    (-2.5, 0.0, -11.651497981795087, 2.870991950567789, -1048051386562188.9, 5394179774218110.7),
    (-2.5, 0.0, -29.128744954487715, 7.177479876419473, -3.5557050641873568e+88, 9.8734714683347965e+88),
    (-0.05, -0.9, 0.3535533905932738, 0.35355339059327373, 1.6245766042321055, -0.12958138156278512),
    (-0.05, -0.9, 2.121320343559643, 2.1213203435596424, -1.8071531296664007, 0.32869730110743081),
    (-0.05, -0.9, 4.949747468305833, 4.949747468305832, 0.16139887058341446, -1.8147502019539356),
    (-0.05, -0.9, 8.485281374238571, 8.48528137423857, 1.4935564672726396, -0.97687428765965909),
    (-0.05, -0.9, 21.213203435596427, 21.213203435596423, -0.56254513024031266, -1.6143787032535314),
    (-0.05, -0.9, 63.63961030678928, 63.63961030678927, 1.503679960855555, 0.60008131174670498),
    (-0.05, -0.9, -0.35355339059327373, -0.3535533905932738, 0.90301611434965579, 0.90424809106066421),
    (-0.05, -0.9, -2.1213203435596424, -2.121320343559643, -0.37805759443088185, -0.52445147579125835),
    (-0.05, -0.9, -4.949747468305832, -4.949747468305833, -0.20091265278888249, 0.082862975070394592),
    (-0.05, -0.9, -8.48528137423857, -8.485281374238571, 0.098292520800598385, 0.13631032388496472),
    (-0.05, -0.9, -21.213203435596423, -21.213203435596427, -0.091354210602218396, -0.080811171283925966),
    (-0.05, -0.9, -63.63961030678927, -63.63961030678928, 0.10426343796195868, 0.064221100246926895),
    (-0.05, -0.9, -0.35355339059327373, 0.3535533905932738, 2.0603389870453178, 1.0705614767871563),
    (-0.05, -0.9, -2.1213203435596424, 2.121320343559643, 3.9254404784305395, 10.843007458771694),
    (-0.05, -0.9, -4.949747468305832, 4.949747468305833, -4.5064649247972468, -7.5451602531721893),
    (-0.05, -0.9, -8.48528137423857, 8.485281374238571, -3.7988071143675541, 5.9591109940721043),
    (-0.05, -0.9, -21.213203435596423, 21.213203435596427, -2.0660375200614581, 6.7825651309268703),
    (-0.05, -0.9, -63.63961030678927, 63.63961030678928, -4.6887247079579738, -4.8306792570221703),
    (-0.05, -0.9, 0.3535533905932738, -0.35355339059327373, 0.97592494479224333, 0.25152734163596321),
    (-0.05, -0.9, 2.121320343559643, -2.1213203435596424, 0.11747040829115259, 0.48415393943083578),
    (-0.05, -0.9, 4.949747468305833, -4.949747468305832, -0.19673601585157699, -0.40716332947233813),
    (-0.05, -0.9, 8.485281374238571, -8.48528137423857, -0.31920026801637611, 0.29859463367417534),
    (-0.05, -0.9, 21.213203435596427, -21.213203435596423, -0.1982393682043032, 0.36606101619556352),
    (-0.05, -0.9, 63.63961030678928, -63.63961030678927, -0.23056280491429998, -0.3193083527160941),
    (-0.05, -0.9, 0.4900332889206208, 0.09933466539753061, 1.2637612376955961, -0.049930762135938791),
    (-0.05, -0.9, 2.940199733523725, 0.5960079923851836, -0.051178555245191169, -0.13525892025016509),
    (-0.05, -0.9, 6.860466044888692, 1.3906853155654284, 1.3249282259699727e-5, -3.5305531806065949e-6),
    (-0.05, -0.9, 11.7607989340949, 2.3840319695407346, -3.5630149464745689e-15, 2.2420518086403001e-15),
    (-0.05, -0.9, 29.401997335237247, 5.960079923851836, -9.1870121463478875e-91, -4.0511292808029556e-91),
    (-0.05, -0.9, -0.4854790825747953, 0.11962466460699121, 1.5570263550085284, 1.309837167524447),
    (-0.05, -0.9, -2.9128744954487718, 0.7177479876419472, -2.265351711160834, 14.464630601311843),
    (-0.05, -0.9, -6.796707156047134, 1.674745304497877, -15142.138256391959, -37131.655777453845),
    (-0.05, -0.9, -11.651497981795087, 2.870991950567789, 32100504677864.073, 2323446911915.7899),
    (-0.05, -0.9, -29.128744954487715, 7.177479876419473, 3.1853659067111207e+85, 5.6458980203024497e+85),
];
