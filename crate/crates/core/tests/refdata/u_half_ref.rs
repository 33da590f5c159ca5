// Tricomi U(a, 1/2, z) reference values generated offline at 40 digits.
pub const U_HALF_REF: &[(f64, f64, f64)] = &[
    (0.2499, 0.0, 1.4462520148726405),
    (0.2499, 1e-08, 1.4461542893269945),
    (0.2499, 0.0001, 1.4365505355916883),
    (0.2499, 0.01, 1.3552875020621087),
    (0.2499, 0.1, 1.1965755249957213),
    (0.2499, 0.5, 0.9972391891383195),
    (0.2499, 1.0, 0.893328175643823),
    (0.2499, 2.0, 0.785664538130858),
    (0.2499, 4.0, 0.6803337025659253),
    (0.2499, 6.0, 0.6218788010608745),
    (0.2499, 8.0, 0.5823366554585484),
    (0.2499, 10.0, 0.5528976906099311),
    (0.2499, 12.0, 0.5296845457342149),
    (0.2499, 14.0, 0.510662378746562),
    (0.2499, 16.0, 0.4946374725562169),
    (0.2499, 18.0, 0.48085303406422447),
    (0.2499, 20.0, 0.4688009046656476),
    (0.2499, 22.0, 0.4581244028008861),
    (0.2499, 24.0, 0.44856416784435865),
    (0.2499, 26.0, 0.4399260890037271),
    (0.2499, 28.0, 0.4320613614970502),
    (0.2499, 30.0, 0.4248535735499066),
    (0.2499, 33.0, 0.41507592843391566),
    (0.2499, 36.0, 0.4063298555875457),
    (0.2499, 40.0, 0.3959669714440479),
    (0.2499, 44.0, 0.3868046331340997),
    (0.2499, 48.0, 0.3786135475619966),
    (0.2499, 55.0, 0.36612513951024456),
    (0.2499, 62.0, 0.35545868155196),
    (0.2499, 70.0, 0.3449558150259015),
    (0.2499, 85.0, 0.3287696493821892),
    (0.2499, 100.0, 0.3157868979645964),
    (0.2499, 125.0, 0.2987694707649119),
    (0.2499, 150.0, 0.2855326551713021),
    (0.2499, 200.0, 0.26580777734483),
    (0.2499, 260.0, 0.24899253604803295),
    (0.2499, 330.0, 0.23462672706374352),
    (0.2499, 400.0, 0.22363627365578795),
    (0.245, 0.0, 1.4385315014817717),
    (0.245, 1e-08, 1.4384358002500675),
    (0.245, 0.0001, 1.4290306890796265),
    (0.245, 0.01, 1.3494243516639397),
    (0.245, 0.1, 1.19380773234789),
    (0.245, 0.5, 0.9980288503668194),
    (0.245, 1.0, 0.8957834554472777),
    (0.245, 2.0, 0.7896698776151818),
    (0.245, 4.0, 0.6856410386415299),
    (0.245, 6.0, 0.6277977506140269),
    (0.245, 8.0, 0.5886171685570599),
    (0.245, 10.0, 0.5594172446076989),
    (0.245, 12.0, 0.536373083727838),
    (0.245, 14.0, 0.5174758130143453),
    (0.245, 16.0, 0.5015461693492406),
    (0.245, 18.0, 0.48783609106979087),
    (0.245, 20.0, 0.4758430243726676),
    (0.245, 22.0, 0.46521405848002734),
    (0.245, 24.0, 0.4556924665078568),
    (0.245, 26.0, 0.44708603441402717),
    (0.245, 28.0, 0.43924735868636544),
    (0.245, 30.0, 0.4320610853524624),
    (0.245, 33.0, 0.42230893437368355),
    (0.245, 36.0, 0.41358197941513897),
    (0.245, 40.0, 0.4032371190972958),
    (0.245, 44.0, 0.3940864227252154),
    (0.245, 48.0, 0.3859022418776419),
    (0.245, 55.0, 0.3734178088879454),
    (0.245, 62.0, 0.36274828217854493),
    (0.245, 70.0, 0.35223637351341813),
    (0.245, 85.0, 0.3360241116745549),
    (0.245, 100.0, 0.3230093055575124),
    (0.245, 125.0, 0.3059340788223986),
    (0.245, 150.0, 0.2926392910134853),
    (0.245, 200.0, 0.2728055836135912),
    (0.245, 260.0, 0.2558749697462419),
    (0.245, 330.0, 0.24139295637110553),
    (0.245, 400.0, 0.23030195177908938),
    (0.2, 0.0, 1.365468640917147),
    (0.2, 1e-08, 1.3653914294676925),
    (0.2, 0.0001, 1.3578012103928807),
    (0.2, 0.01, 1.2933739423265724),
    (0.2, 0.1, 1.1663636692291937),
    (0.2, 0.5, 1.0040371970666326),
    (0.2, 1.0, 0.9177926772214987),
    (0.2, 2.0, 0.8268975427260812),
    (0.2, 4.0, 0.736068124162232),
    (0.2, 6.0, 0.6846605330864712),
    (0.2, 8.0, 0.6494085437473258),
    (0.2, 10.0, 0.622885113455402),
    (0.2, 12.0, 0.6017892485970644),
    (0.2, 14.0, 0.5843747518312985),
    (0.2, 16.0, 0.5696102916322554),
    (0.2, 18.0, 0.556838158375703),
    (0.2, 20.0, 0.5456144045279478),
    (0.2, 22.0, 0.5356259445076964),
    (0.2, 24.0, 0.5266441377602544),
    (0.2, 26.0, 0.518497188131483),
    (0.2, 28.0, 0.5110529154083001),
    (0.2, 30.0, 0.5042075615147467),
    (0.2, 33.0, 0.49488565292310566),
    (0.2, 36.0, 0.48651123693663817),
    (0.2, 40.0, 0.47654334028888906),
    (0.2, 44.0, 0.4676879643105724),
    (0.2, 48.0, 0.4597366792868227),
    (0.2, 55.0, 0.44754883046529853),
    (0.2, 62.0, 0.4370745960088271),
    (0.2, 70.0, 0.4267006168681706),
    (0.2, 85.0, 0.41059033364624203),
    (0.2, 100.0, 0.3975553961291474),
    (0.2, 125.0, 0.38030779498474515),
    (0.2, 150.0, 0.36675744668279175),
    (0.2, 200.0, 0.34633104607489595),
    (0.2, 260.0, 0.32867928045516376),
    (0.2, 330.0, 0.3134104645307246),
    (0.2, 400.0, 0.30160348669334314),
    (0.1, 0.0, 1.1902115743071553),
    (0.1, 1e-08, 1.1901743148507433),
    (0.1, 0.0001, 1.186509046690747),
    (0.1, 0.01, 1.1551893879993202),
    (0.1, 0.1, 1.0922134171170654),
    (0.1, 0.5, 1.0087135039645145),
    (0.1, 1.0, 0.9625552060181135),
    (0.1, 2.0, 0.9121586079995782),
    (0.1, 4.0, 0.8595541184492607),
    (0.1, 6.0, 0.8285633715702407),
    (0.1, 8.0, 0.8067151862754818),
    (0.1, 10.0, 0.7899210827591242),
    (0.1, 12.0, 0.7763276518099637),
    (0.1, 14.0, 0.7649385860140029),
    (0.1, 16.0, 0.7551573741609309),
    (0.1, 18.0, 0.7465990548347466),
    (0.1, 20.0, 0.7390010243269566),
    (0.1, 22.0, 0.732176316601217),
    (0.1, 24.0, 0.7259872066360997),
    (0.1, 26.0, 0.7203293846153452),
    (0.1, 28.0, 0.7151220023537596),
    (0.1, 30.0, 0.7103011607220625),
    (0.1, 33.0, 0.7036849790885688),
    (0.1, 36.0, 0.6976895394863285),
    (0.1, 40.0, 0.6904874854507664),
    (0.1, 44.0, 0.6840274132636406),
    (0.1, 48.0, 0.6781757807838059),
    (0.1, 55.0, 0.6691092689922501),
    (0.1, 62.0, 0.6612202505347529),
    (0.1, 70.0, 0.6533145801354596),
    (0.1, 85.0, 0.640847284713997),
    (0.1, 100.0, 0.6305820425265177),
    (0.1, 125.0, 0.6167397418458611),
    (0.1, 150.0, 0.6056449899167561),
    (0.1, 200.0, 0.588528177561501),
    (0.1, 260.0, 0.5733274937987058),
    (0.1, 330.0, 0.5598476320643029),
    (0.1, 400.0, 0.5491980600557552),
    (0.0, 0.0, 1.0),
    (0.0, 1e-08, 1.0),
    (0.0, 0.0001, 1.0),
    (0.0, 0.01, 1.0),
    (0.0, 0.1, 1.0),
    (0.0, 0.5, 1.0),
    (0.0, 1.0, 1.0),
    (0.0, 2.0, 1.0),
    (0.0, 4.0, 1.0),
    (0.0, 6.0, 1.0),
    (0.0, 8.0, 1.0),
    (0.0, 10.0, 1.0),
    (0.0, 12.0, 1.0),
    (0.0, 14.0, 1.0),
    (0.0, 16.0, 1.0),
    (0.0, 18.0, 1.0),
    (0.0, 20.0, 1.0),
    (0.0, 22.0, 1.0),
    (0.0, 24.0, 1.0),
    (0.0, 26.0, 1.0),
    (0.0, 28.0, 1.0),
    (0.0, 30.0, 1.0),
    (0.0, 33.0, 1.0),
    (0.0, 36.0, 1.0),
    (0.0, 40.0, 1.0),
    (0.0, 44.0, 1.0),
    (0.0, 48.0, 1.0),
    (0.0, 55.0, 1.0),
    (0.0, 62.0, 1.0),
    (0.0, 70.0, 1.0),
    (0.0, 85.0, 1.0),
    (0.0, 100.0, 1.0),
    (0.0, 125.0, 1.0),
    (0.0, 150.0, 1.0),
    (0.0, 200.0, 1.0),
    (0.0, 260.0, 1.0),
    (0.0, 330.0, 1.0),
    (0.0, 400.0, 1.0),
    (-0.05, 0.0, 0.9005747012061897),
    (-0.05, 1e-08, 0.9005918843490106),
    (-0.05, 0.0001, 0.9022841510620323),
    (-0.05, 0.01, 0.9169070125796199),
    (-0.05, 0.1, 0.9472955373500618),
    (-0.05, 0.5, 0.9901019126376495),
    (-0.05, 1.0, 1.0153254453112697),
    (-0.05, 2.0, 1.0444601220581557),
    (-0.05, 4.0, 1.0770296166838578),
    (-0.05, 6.0, 1.097444582992151),
    (-0.05, 8.0, 1.1124628505519616),
    (-0.05, 10.0, 1.1243915048550928),
    (-0.05, 12.0, 1.1343083057572478),
    (-0.05, 14.0, 1.142806911501967),
    (-0.05, 16.0, 1.1502501870412691),
    (-0.05, 18.0, 1.1568765674292534),
    (-0.05, 20.0, 1.162851325218525),
    (-0.05, 22.0, 1.1682938358178154),
    (-0.05, 24.0, 1.1732931941513371),
    (-0.05, 26.0, 1.1779176945860659),
    (-0.05, 28.0, 1.1822208618003893),
    (-0.05, 30.0, 1.1862454387057633),
    (-0.05, 33.0, 1.1918341004399484),
    (-0.05, 36.0, 1.1969651313776764),
    (-0.05, 40.0, 1.2032148271476812),
    (-0.05, 44.0, 1.208902578485611),
    (-0.05, 48.0, 1.2141232116544016),
    (-0.05, 55.0, 1.2223444408019541),
    (-0.05, 62.0, 1.229632846621679),
    (-0.05, 70.0, 1.237066742200891),
    (-0.05, 85.0, 1.2490648213141906),
    (-0.05, 100.0, 1.2592067493756818),
    (-0.05, 125.0, 1.27327801772325),
    (-0.05, 150.0, 1.2849002283160142),
    (-0.05, 200.0, 1.303467443246714),
    (-0.05, 260.0, 1.3206451780448434),
    (-0.05, 330.0, 1.336457785987723),
    (-0.05, 400.0, 1.349358614665333),
    (-0.125, 0.0, 0.7477332073133801),
    (-0.125, 1e-08, 0.747773871025213),
    (-0.125, 0.0001, 0.7517811732111356),
    (-0.125, 0.01, 0.786625933641548),
    (-0.125, 0.1, 0.8603819421365195),
    (-0.125, 0.5, 0.9677917708410148),
    (-0.125, 1.0, 1.033289310679991),
    (-0.125, 2.0, 1.1112364334079712),
    (-0.125, 4.0, 1.201555578308004),
    (-0.125, 6.0, 1.260004850850146),
    (-0.125, 8.0, 1.3039497543797756),
    (-0.125, 10.0, 1.3394418184358101),
    (-0.125, 12.0, 1.3693513678635476),
    (-0.125, 14.0, 1.3952790785676603),
    (-0.125, 16.0, 1.4182136204250313),
    (-0.125, 18.0, 1.4388105765984096),
    (-0.125, 20.0, 1.4575280501163244),
    (-0.125, 22.0, 1.4746993365340437),
    (-0.125, 24.0, 1.4905748354990567),
    (-0.125, 26.0, 1.505347652415524),
    (-0.125, 28.0, 1.5191699793994828),
    (-0.125, 30.0, 1.5321639849797501),
    (-0.125, 33.0, 1.5503149749244745),
    (-0.125, 36.0, 1.5670897151104743),
    (-0.125, 40.0, 1.587664603894922),
    (-0.125, 44.0, 1.6065264984415843),
    (-0.125, 48.0, 1.6239546973443486),
    (-0.125, 55.0, 1.6516247245563707),
    (-0.125, 62.0, 1.6763861909341002),
    (-0.125, 70.0, 1.7018666720058002),
    (-0.125, 85.0, 1.7434726342976592),
    (-0.125, 100.0, 1.7791080367631542),
    (-0.125, 125.0, 1.8292615555753378),
    (-0.125, 150.0, 1.8713135590773253),
    (-0.125, 200.0, 1.9396805968749349),
    (-0.125, 260.0, 2.0042402502453722),
    (-0.125, 330.0, 2.0647896553947347),
    (-0.125, 400.0, 2.1149899769456098),
    (-0.25, 0.0, 0.4888705337234619),
    (-0.25, 1e-08, 0.48894285173346136),
    (-0.25, 0.0001, 0.4960782555459375),
    (-0.25, 0.01, 0.5588613461904961),
    (-0.25, 0.1, 0.6964077246830019),
    (-0.25, 0.5, 0.9093541047305868),
    (-0.25, 1.0, 1.047426241320841),
    (-0.25, 2.0, 1.2206455775666456),
    (-0.25, 4.0, 1.4342923222239645),
    (-0.25, 6.0, 1.5803224878982978),
    (-0.25, 8.0, 1.6942624876784171),
    (-0.25, 10.0, 1.7889292812153608),
    (-0.25, 12.0, 1.8705601029573835),
    (-0.25, 14.0, 1.942706266321554),
    (-0.25, 16.0, 2.0076001901859413),
    (-0.25, 18.0, 2.0667450032474504),
    (-0.25, 20.0, 2.121205388714304),
    (-0.25, 22.0, 2.171765462269254),
    (-0.25, 24.0, 2.219020878839799),
    (-0.25, 26.0, 2.2634356892732437),
    (-0.25, 28.0, 2.305379071597568),
    (-0.25, 30.0, 2.3451499677388497),
    (-0.25, 33.0, 2.401259012548865),
    (-0.25, 36.0, 2.453688860375145),
    (-0.25, 40.0, 2.5187517229185263),
    (-0.25, 44.0, 2.579130104280299),
    (-0.25, 48.0, 2.635542707675),
    (-0.25, 55.0, 2.7263386706835666),
    (-0.25, 62.0, 2.808874010022837),
    (-0.25, 70.0, 2.8950732247884066),
    (-0.25, 85.0, 3.038590774940114),
    (-0.25, 100.0, 3.1642449381832796),
    (-0.25, 125.0, 3.3453671708856674),
    (-0.25, 150.0, 3.5010891755171727),
    (-0.25, 200.0, 3.76177554508164),
    (-0.25, 260.0, 4.01649781396741),
    (-0.25, 330.0, 4.2629536781812725),
    (-0.25, 400.0, 4.4728339100420325),
    (-0.3, 0.0, 0.3860845548440178),
    (-0.3, 1e-08, 0.38616648064607473),
    (-0.3, 0.0001, 0.39425431031581243),
    (-0.3, 0.01, 0.46580024872233655),
    (-0.3, 0.1, 0.6249849965664677),
    (-0.3, 0.5, 0.8781613510463149),
    (-0.3, 1.0, 1.0466926715643692),
    (-0.3, 2.0, 1.2628905707076774),
    (-0.3, 4.0, 1.5365708134419043),
    (-0.3, 6.0, 1.7278773138569266),
    (-0.3, 8.0, 1.8794184587945915),
    (-0.3, 10.0, 2.006783272031332),
    (-0.3, 12.0, 2.1176370479409776),
    (-0.3, 14.0, 2.2163809724097625),
    (-0.3, 16.0, 2.3058014114243495),
    (-0.3, 18.0, 2.3877860829465494),
    (-0.3, 20.0, 2.463679403712025),
    (-0.3, 22.0, 2.5344763784553215),
    (-0.3, 24.0, 2.6009362415618256),
    (-0.3, 26.0, 2.6636529035151333),
    (-0.3, 28.0, 2.7231006381468084),
    (-0.3, 30.0, 2.7796648363337852),
    (-0.3, 33.0, 2.8597852108632735),
    (-0.3, 36.0, 2.9349845335996334),
    (-0.3, 40.0, 3.028742301608342),
    (-0.3, 44.0, 3.116177062786844),
    (-0.3, 48.0, 3.1982342814978035),
    (-0.3, 55.0, 3.3310318808529216),
    (-0.3, 62.0, 3.4525088423906047),
    (-0.3, 70.0, 3.580134246304965),
    (-0.3, 85.0, 3.794291023103777),
    (-0.3, 100.0, 3.9834504387061513),
    (-0.3, 125.0, 4.258736030527169),
    (-0.3, 150.0, 4.497804540660019),
    (-0.3, 200.0, 4.902741502891577),
    (-0.3, 260.0, 5.303860019241248),
    (-0.3, 330.0, 5.696827081584709),
    (-0.3, 400.0, 6.0350805155590255),
    (-0.49, 0.0, 0.017825684093213272),
    (-0.49, 1e-08, 0.017925602793220353),
    (-0.49, 0.0001, 0.0278158312770792),
    (-0.49, 0.01, 0.1175762442461973),
    (-0.49, 0.1, 0.33223467132900353),
    (-0.49, 0.5, 0.7174175940912755),
    (-0.49, 1.0, 1.0041657527230587),
    (-0.49, 2.0, 1.4075694513367063),
    (-0.49, 4.0, 1.97475398213235),
    (-0.49, 6.0, 2.4078832633495324),
    (-0.49, 8.0, 2.7718667469675786),
    (-0.49, 10.0, 3.091774033329005),
    (-0.49, 12.0, 3.380434972917802),
    (-0.49, 14.0, 3.6454579892186882),
    (-0.49, 16.0, 3.8917932026413204),
    (-0.49, 18.0, 4.122874653293408),
    (-0.49, 20.0, 4.341199863287784),
    (-0.49, 22.0, 4.548652378238061),
    (-0.49, 24.0, 4.746694200622708),
    (-0.49, 26.0, 4.936487020428177),
    (-0.49, 28.0, 5.118972011278813),
    (-0.49, 30.0, 5.294924284796396),
    (-0.49, 33.0, 5.547991963460081),
    (-0.49, 36.0, 5.789578170476032),
    (-0.49, 40.0, 6.096242851458393),
    (-0.49, 44.0, 6.387632127587921),
    (-0.49, 48.0, 6.665800403026831),
    (-0.49, 55.0, 7.125514527801971),
    (-0.49, 62.0, 7.556246368090728),
    (-0.49, 70.0, 8.019149847825135),
    (-0.49, 85.0, 8.819424235367899),
    (-0.49, 100.0, 9.55039261335456),
    (-0.49, 125.0, 10.653759668654908),
    (-0.49, 150.0, 11.649274513194122),
    (-0.49, 200.0, 13.41267261945739),
    (-0.49, 260.0, 15.252643412822577),
    (-0.49, 330.0, 17.142662465913386),
    (-0.49, 400.0, 18.837129021464744),
    (-0.4999, 0.0, 0.0001772556148092916),
    (-0.4999, 1e-08, 0.00027725524367071166),
    (-0.4999, 0.0001, 0.010177201022520746),
    (-0.4999, 0.01, 0.10017517788656885),
    (-0.4999, 0.1, 0.3163879812958127),
    (-0.4999, 0.5, 0.7072107912505774),
    (-0.4999, 1.0, 1.000042680432117),
    (-0.4999, 2.0, 1.4141477203910284),
    (-0.4999, 4.0, 1.999746466823552),
    (-0.4999, 6.0, 2.4490705573051144),
    (-0.4999, 8.0, 2.827856205917479),
    (-0.4999, 10.0, 3.1615650456575017),
    (-0.4999, 12.0, 3.463255073638648),
    (-0.4999, 14.0, 3.740683205625637),
    (-0.4999, 16.0, 3.9989034279797613),
    (-0.4999, 18.0, 4.2414262074085345),
    (-0.4999, 20.0, 4.47080746489133),
    (-0.4999, 22.0, 4.688976695036707),
    (-0.4999, 24.0, 4.897432909637798),
    (-0.4999, 26.0, 5.0973681841921525),
    (-0.4999, 28.0, 5.289749041535522),
    (-0.4999, 30.0, 5.4753720294096295),
    (-0.4999, 33.0, 5.742563042047454),
    (-0.4999, 36.0, 5.99785854619474),
    (-0.4999, 40.0, 6.322230551364917),
    (-0.4999, 44.0, 6.6307473997068485),
    (-0.4999, 48.0, 6.925528878429939),
    (-0.4999, 55.0, 7.413233872511147),
    (-0.4999, 62.0, 7.870765156575099),
    (-0.4999, 70.0, 8.363052425535967),
    (-0.4999, 85.0, 9.21545484892586),
    (-0.4999, 100.0, 9.99540087435648),
    (-0.4999, 125.0, 11.174947431850125),
    (-0.4999, 150.0, 12.241317574096183),
    (-0.4999, 200.0, 14.134648184663655),
    (-0.4999, 260.0, 16.115554754923092),
    (-0.4999, 330.0, 18.15537335177185),
    (-0.4999, 400.0, 19.98802315639875),
    (-0.5, 0.0, 0.0),
    (-0.5, 1e-08, 0.0001),
    (-0.5, 0.0001, 0.01),
    (-0.5, 0.01, 0.1),
    (-0.5, 0.1, 0.31622776601683794),
    (-0.5, 0.5, 0.7071067811865476),
    (-0.5, 1.0, 1.0),
    (-0.5, 2.0, 1.4142135623730951),
    (-0.5, 4.0, 2.0),
    (-0.5, 6.0, 2.449489742783178),
    (-0.5, 8.0, 2.8284271247461903),
    (-0.5, 10.0, 3.1622776601683795),
    (-0.5, 12.0, 3.4641016151377544),
    (-0.5, 14.0, 3.7416573867739413),
    (-0.5, 16.0, 4.0),
    (-0.5, 18.0, 4.242640687119285),
    (-0.5, 20.0, 4.47213595499958),
    (-0.5, 22.0, 4.69041575982343),
    (-0.5, 24.0, 4.898979485566356),
    (-0.5, 26.0, 5.0990195135927845),
    (-0.5, 28.0, 5.291502622129181),
    (-0.5, 30.0, 5.477225575051661),
    (-0.5, 33.0, 5.744562646538029),
    (-0.5, 36.0, 6.0),
    (-0.5, 40.0, 6.324555320336759),
    (-0.5, 44.0, 6.6332495807108),
    (-0.5, 48.0, 6.928203230275509),
    (-0.5, 55.0, 7.416198487095663),
    (-0.5, 62.0, 7.874007874011811),
    (-0.5, 70.0, 8.366600265340756),
    (-0.5, 85.0, 9.219544457292887),
    (-0.5, 100.0, 10.0),
    (-0.5, 125.0, 11.180339887498949),
    (-0.5, 150.0, 12.24744871391589),
    (-0.5, 200.0, 14.142135623730951),
    (-0.5, 260.0, 16.1245154965971),
    (-0.5, 330.0, 18.16590212458495),
    (-0.5, 400.0, 20.0),
    (-0.5001, 0.0, -0.00017723515304674534),
    (-0.5001, 1e-08, -7.723479084113165e-05),
    (-0.5001, 0.0001, 0.009822818550937855),
    (-0.5001, 0.01, 0.0998248341452837),
    (-0.5001, 0.1, 0.3160675479505216),
    (-0.5001, 0.5, 0.7070027529283931),
    (-0.5001, 1.0, 0.9999572988375088),
    (-0.5001, 2.0, 1.414279392122547),
    (-0.5001, 4.0, 2.000253554833335),
    (-0.5001, 6.0, 2.4499089915593264),
    (-0.5001, 8.0, 2.828998151574048),
    (-0.5001, 10.0, 3.1629904288353607),
    (-0.5001, 12.0, 3.464948357677553),
    (-0.5001, 14.0, 3.742631816192744),
    (-0.5001, 16.0, 4.001096867646448),
    (-0.5001, 18.0, 4.2438555098046615),
    (-0.5001, 20.0, 4.473464835339576),
    (-0.5001, 22.0, 4.691855261953491),
    (-0.5001, 24.0, 4.900526545768905),
    (-0.5001, 26.0, 5.100671373994021),
    (-0.5001, 28.0, 5.293256780231186),
    (-0.5001, 30.0, 5.4790797444817505),
    (-0.5001, 33.0, 5.746562943798072),
    (-0.5001, 36.0, 6.002142215025339),
    (-0.5001, 40.0, 6.326880940974746),
    (-0.5001, 44.0, 6.635752702905696),
    (-0.5001, 48.0, 6.930878611942269),
    (-0.5001, 55.0, 7.419164284544634),
    (-0.5001, 62.0, 7.877251924881448),
    (-0.5001, 70.0, 8.370149607838165),
    (-0.5001, 85.0, 9.223635878358142),
    (-0.5001, 100.0, 10.004601239806584),
    (-0.5001, 125.0, 11.185734943476636),
    (-0.5001, 150.0, 12.253582922918488),
    (-0.5001, 200.0, 14.149627027645352),
    (-0.5001, 260.0, 16.133481219475506),
    (-0.5001, 330.0, 18.176437002204583),
    (-0.5001, 400.0, 20.011984019136772),
    (-0.75, 0.0, -0.3616022711580193),
    (-0.75, 1e-08, -0.36152893515404894),
    (-0.75, 0.0001, -0.35421509457895),
    (-0.75, 0.01, -0.2829655307241274),
    (-0.75, 0.1, -0.07893443130785772),
    (-0.75, 0.5, 0.39370475292006574),
    (-0.75, 1.0, 0.8241067525359993),
    (-0.75, 2.0, 1.5298578059609695),
    (-0.75, 4.0, 2.6985282047270167),
    (-0.75, 6.0, 3.7155440871347887),
    (-0.75, 8.0, 4.646545688522283),
    (-0.75, 10.0, 5.518899749281014),
    (-0.75, 12.0, 6.34742304940057),
    (-0.75, 14.0, 7.141310188932319),
    (-0.75, 16.0, 7.90677639566615),
    (-0.75, 18.0, 8.648278551599802),
    (-0.75, 20.0, 9.369154319888896),
    (-0.75, 22.0, 10.071987741618592),
    (-0.75, 24.0, 10.75883280079707),
    (-0.75, 26.0, 11.431357457363914),
    (-0.75, 28.0, 12.09094041937057),
    (-0.75, 30.0, 12.73873844722839),
    (-0.75, 33.0, 13.690450426325212),
    (-0.75, 36.0, 14.620587367390065),
    (-0.75, 40.0, 15.831029617469676),
    (-0.75, 44.0, 17.011349325193564),
    (-0.75, 48.0, 18.164958941532273),
    (-0.75, 55.0, 20.127574275132012),
    (-0.75, 62.0, 22.02826821032559),
    (-0.75, 70.0, 24.135718208846768),
    (-0.75, 85.0, 27.932266927176855),
    (-0.75, 100.0, 31.563539083268317),
    (-0.75, 125.0, 37.327685765566834),
    (-0.75, 150.0, 42.80806276192977),
    (-0.75, 200.0, 53.13312323227638),
    (-0.75, 260.0, 64.70186773775482),
    (-0.75, 330.0, 77.38177662110584),
    (-0.75, 400.0, 89.40080263404009),
    (-1.0, 0.0, -0.5),
    (-1.0, 1e-08, -0.49999999),
    (-1.0, 0.0001, -0.4999),
    (-1.0, 0.01, -0.49),
    (-1.0, 0.1, -0.4),
    (-1.0, 0.5, 0.0),
    (-1.0, 1.0, 0.5),
    (-1.0, 2.0, 1.5),
    (-1.0, 4.0, 3.5),
    (-1.0, 6.0, 5.5),
    (-1.0, 8.0, 7.5),
    (-1.0, 10.0, 9.5),
    (-1.0, 12.0, 11.5),
    (-1.0, 14.0, 13.5),
    (-1.0, 16.0, 15.5),
    (-1.0, 18.0, 17.5),
    (-1.0, 20.0, 19.5),
    (-1.0, 22.0, 21.5),
    (-1.0, 24.0, 23.5),
    (-1.0, 26.0, 25.5),
    (-1.0, 28.0, 27.5),
    (-1.0, 30.0, 29.5),
    (-1.0, 33.0, 32.5),
    (-1.0, 36.0, 35.5),
    (-1.0, 40.0, 39.5),
    (-1.0, 44.0, 43.5),
    (-1.0, 48.0, 47.5),
    (-1.0, 55.0, 54.5),
    (-1.0, 62.0, 61.5),
    (-1.0, 70.0, 69.5),
    (-1.0, 85.0, 84.5),
    (-1.0, 100.0, 99.5),
    (-1.0, 125.0, 124.5),
    (-1.0, 150.0, 149.5),
    (-1.0, 200.0, 199.5),
    (-1.0, 260.0, 259.5),
    (-1.0, 330.0, 329.5),
    (-1.0, 400.0, 399.5),
    (-1.25, 0.0, -0.36665290029259645),
    (-1.25, 1e-08, -0.3667432916936114),
    (-1.25, 0.0001, -0.3756008426052426),
    (-1.25, 0.01, -0.44744256271528476),
    (-1.25, 0.1, -0.5472670523865448),
    (-1.25, 0.5, -0.4036242779727874),
    (-1.25, 1.0, 0.03853707154536846),
    (-1.25, 2.0, 1.2480614745173657),
    (-1.25, 4.0, 4.32133716778606),
    (-1.25, 6.0, 7.915945264371628),
    (-1.25, 8.0, 11.871718996030074),
    (-1.25, 10.0, 16.1105964249487),
    (-1.25, 12.0, 20.585198360173088),
    (-1.25, 14.0, 25.26330631992146),
    (-1.25, 16.0, 30.121405440025146),
    (-1.25, 18.0, 35.141479704122766),
    (-1.25, 20.0, 40.30922786037903),
    (-1.25, 22.0, 45.6129859393343),
    (-1.25, 24.0, 51.043035520613415),
    (-1.25, 26.0, 56.59113797499807),
    (-1.25, 28.0, 62.250208629408895),
    (-1.25, 30.0, 68.0140815412491),
    (-1.25, 33.0, 76.84470587393679),
    (-1.25, 36.0, 85.88325755905903),
    (-1.25, 40.0, 98.23515880138774),
    (-1.25, 44.0, 110.90617820045492),
    (-1.25, 48.0, 123.87387018578964),
    (-1.25, 55.0, 147.22533188512693),
    (-1.25, 62.0, 171.3441018314306),
    (-1.25, 70.0, 199.76260145173578),
    (-1.25, 85.0, 255.24383364687372),
    (-1.25, 100.0, 313.2622071290457),
    (-1.25, 125.0, 414.8271886946294),
    (-1.25, 150.0, 521.6637363371896),
    (-1.25, 200.0, 748.5945032044511),
    (-1.25, 260.0, 1040.2738956357282),
    (-1.25, 330.0, 1402.5125650668688),
    (-1.25, 400.0, 1784.6614272482702),
    (-1.7435, 0.0, 0.44103999283436196),
    (-1.7435, 1e-08, 0.4409097491880925),
    (-1.7435, 0.0001, 0.42786445875895185),
    (-1.7435, 0.01, 0.29654985369829806),
    (-1.7435, 0.1, -0.08677176056969786),
    (-1.7435, 0.5, -0.7797263758679605),
    (-1.7435, 1.0, -0.9808519310204322),
    (-1.7435, 2.0, -0.12139576162172515),
    (-1.7435, 4.0, 5.270622673452966),
    (-1.7435, 6.0, 14.643029557863482),
    (-1.7435, 8.0, 27.48343103721068),
    (-1.7435, 10.0, 43.49612397024498),
    (-1.7435, 12.0, 62.478319595201405),
    (-1.7435, 14.0, 84.27810267633926),
    (-1.7435, 16.0, 108.77530422430296),
    (-1.7435, 18.0, 135.8712806563523),
    (-1.7435, 20.0, 165.4828517512715),
    (-1.7435, 22.0, 197.5384298951657),
    (-1.7435, 24.0, 231.97540830280656),
    (-1.7435, 26.0, 268.7383214438424),
    (-1.7435, 28.0, 307.7775040382786),
    (-1.7435, 30.0, 349.04808555265316),
    (-1.7435, 33.0, 415.0494250546686),
    (-1.7435, 36.0, 485.8563568925489),
    (-1.7435, 40.0, 587.5524597005813),
    (-1.7435, 44.0, 697.3671598083641),
    (-1.7435, 48.0, 815.0982457511548),
    (-1.7435, 55.0, 1039.6464161947097),
    (-1.7435, 62.0, 1287.0617579754128),
    (-1.7435, 70.0, 1596.9182269621683),
    (-1.7435, 85.0, 2252.853720826681),
    (-1.7435, 100.0, 3002.544486944319),
    (-1.7435, 125.0, 4450.097402234374),
    (-1.7435, 150.0, 6133.32561006035),
    (-1.7435, 200.0, 10165.16433458553),
    (-1.7435, 260.0, 16101.661842342044),
    (-1.7435, 330.0, 24443.713749036702),
    (-1.7435, 400.0, 34224.081861839186),
    (-2.25, 0.0, 0.6416425755120437),
    (-2.25, 1e-08, 0.6418459479132813),
    (-2.25, 0.0001, 0.6616916031571509),
    (-2.25, 0.01, 0.8139207504651115),
    (-2.25, 0.1, 0.9341922100306657),
    (-2.25, 0.5, 0.15654122174704338),
    (-2.25, 1.0, -1.0590362443290255),
    (-2.25, 2.0, -2.392416703486096),
    (-2.25, 4.0, 2.9766881157010934),
    (-2.25, 6.0, 22.26628346071023),
    (-2.25, 8.0, 57.77022389795185),
    (-2.25, 10.0, 111.0970537735015),
    (-2.25, 12.0, 183.51313514503525),
    (-2.25, 14.0, 276.07508239445957),
    (-2.25, 16.0, 389.6961455420276),
    (-2.25, 18.0, 525.184622121297),
    (-2.25, 20.0, 683.2682435745239),
    (-2.25, 22.0, 864.6107027264743),
    (-2.25, 24.0, 1069.8234138589694),
    (-2.25, 26.0, 1299.4742024662619),
    (-2.25, 28.0, 1554.0939228555997),
    (-2.25, 30.0, 1834.1816235189704),
    (-2.25, 33.0, 2303.0899958938394),
    (-2.25, 36.0, 2831.8471661423464),
    (-2.25, 40.0, 3632.3395459111107),
    (-2.25, 44.0, 4544.735371745889),
    (-2.25, 48.0, 5571.853337072089),
    (-2.25, 55.0, 7653.161315522835),
    (-2.25, 62.0, 10106.66868867001),
    (-2.25, 70.0, 13381.380166118057),
    (-2.25, 85.0, 20927.145680192138),
    (-2.25, 100.0, 30383.467611887885),
    (-2.25, 125.0, 50605.78073902208),
    (-2.25, 150.0, 76681.28697046482),
    (-2.25, 200.0, 147469.59046670338),
    (-2.25, 260.0, 267346.62571168155),
    (-2.25, 330.0, 458617.6122577928),
    (-2.25, 400.0, 708506.3933357726),
    (-3.0, 0.0, -1.875),
    (-3.0, 1e-08, -1.8749998875000007),
    (-3.0, 0.0001, -1.873875074999),
    (-3.0, 0.01, -1.763249),
    (-3.0, 0.1, -0.824),
    (-3.0, 0.5, 2.0),
    (-3.0, 1.0, 2.875),
    (-3.0, 2.0, -1.375),
    (-3.0, 4.0, -12.875),
    (-3.0, 6.0, 11.625),
    (-3.0, 8.0, 120.125),
    (-3.0, 10.0, 360.625),
    (-3.0, 12.0, 781.125),
    (-3.0, 14.0, 1429.625),
    (-3.0, 16.0, 2354.125),
    (-3.0, 18.0, 3602.625),
    (-3.0, 20.0, 5223.125),
    (-3.0, 22.0, 7263.625),
    (-3.0, 24.0, 9772.125),
    (-3.0, 26.0, 12796.625),
    (-3.0, 28.0, 16385.125),
    (-3.0, 30.0, 20585.625),
    (-3.0, 33.0, 28138.875),
    (-3.0, 36.0, 37339.125),
    (-3.0, 40.0, 52448.125),
    (-3.0, 44.0, 71157.125),
    (-3.0, 48.0, 93850.125),
    (-3.0, 55.0, 144304.375),
    (-3.0, 62.0, 210193.625),
    (-3.0, 70.0, 307035.625),
    (-3.0, 85.0, 560891.875),
    (-3.0, 100.0, 926123.125),
    (-3.0, 125.0, 1837341.875),
    (-3.0, 150.0, 3207935.625),
    (-3.0, 200.0, 7702248.125),
    (-3.0, 260.0, 17071923.125),
    (-3.0, 330.0, 35123960.625),
    (-3.0, 400.0, 62804498.125),
    (-3.75, 0.0, 3.30527075980377),
    (-3.75, 1e-08, 3.3039471241251452),
    (-3.75, 0.0001, 3.170481924878926),
    (-3.75, 0.01, 1.7647992409755666),
    (-3.75, 0.1, -2.27022371722851),
    (-3.75, 0.5, -5.419808983782854),
    (-3.75, 1.0, 0.2752246029516846),
    (-3.75, 2.0, 13.119280363915465),
    (-3.75, 4.0, -20.799057472236274),
    (-3.75, 6.0, -91.23837908991851),
    (-3.75, 8.0, 30.00468683380334),
    (-3.75, 10.0, 736.3066913688368),
    (-3.75, 12.0, 2566.5547543899816),
    (-3.75, 14.0, 6193.3769956743035),
    (-3.75, 16.0, 12414.946607251559),
    (-3.75, 18.0, 22148.791144605028),
    (-3.75, 20.0, 36426.87037394374),
    (-3.75, 22.0, 56391.52170187371),
    (-3.75, 24.0, 83292.03252294107),
    (-3.75, 26.0, 118481.68454774526),
    (-3.75, 28.0, 163415.16494217474),
    (-3.75, 30.0, 219646.26986801188),
    (-3.75, 33.0, 328813.27597769257),
    (-3.75, 36.0, 473108.0478218666),
    (-3.75, 40.0, 731342.7644312023),
    (-3.75, 44.0, 1080059.8993171607),
    (-3.75, 48.0, 1537197.0231890546),
    (-3.75, 55.0, 2656907.7603810197),
    (-3.75, 62.0, 4281776.478945093),
    (-3.75, 70.0, 6918743.8200345),
    (-3.75, 85.0, 14815735.898832874),
    (-3.75, 100.0, 27887115.622923307),
    (-3.75, 125.0, 66071274.27248099),
    (-3.75, 150.0, 133145702.60571824),
    (-3.75, 200.0, 399936570.9508892),
    (-3.75, 260.0, 1085308683.768277),
    (-3.75, 330.0, 2680649735.467942),
    (-3.75, 400.0, 5551267239.252906),
    (-5.25, 0.0, -31.430460534847768),
    (-5.25, 1e-08, -31.445207004948006),
    (-5.25, 0.0001, -32.871973261882566),
    (-5.25, 0.01, -42.4630013147884),
    (-5.25, 0.1, -35.856065125797834),
    (-5.25, 0.5, 46.6773206768908),
    (-5.25, 1.0, 55.23515211850515),
    (-5.25, 2.0, -106.5369789720627),
    (-5.25, 4.0, 151.76320630838515),
    (-5.25, 6.0, 712.1940665824733),
    (-5.25, 8.0, -1627.38649127665),
    (-5.25, 10.0, -7358.824146660939),
    (-5.25, 12.0, -6048.762555581318),
    (-5.25, 14.0, 33130.797832948265),
    (-5.25, 16.0, 171778.70295595063),
    (-5.25, 18.0, 513363.05879814667),
    (-5.25, 20.0, 1214925.7056854242),
    (-5.25, 22.0, 2499312.23352215),
    (-5.25, 24.0, 4667868.088230429),
    (-5.25, 26.0, 8113554.879854746),
    (-5.25, 28.0, 13334450.277535697),
    (-5.25, 30.0, 20947601.518752065),
    (-5.25, 33.0, 38533836.55660626),
    (-5.25, 36.0, 66395562.71310638),
    (-5.25, 40.0, 126633835.24355124),
    (-5.25, 44.0, 224726815.09868014),
    (-5.25, 48.0, 376571175.96863),
    (-5.25, 55.0, 834393252.2938349),
    (-5.25, 62.0, 1663348953.5425382),
    (-5.25, 70.0, 3318433989.5341907),
    (-5.25, 85.0, 9877650936.533344),
    (-5.25, 100.0, 24346719287.330593),
    (-5.25, 125.0, 82951450410.29457),
    (-5.25, 150.0, 223872872877.85638),
    (-5.25, 200.0, 1059234787399.0394),
    (-5.25, 260.0, 4327268453592.2715),
    (-5.25, 330.0, 15449762483347.479),
    (-5.25, 400.0, 42996115195094.4),
    (-7.25, 0.0, -1219.894749508779),
    (-7.25, 1e-08, -1220.5629215817855),
    (-7.25, 0.0001, -1284.9310971419015),
    (-7.25, 0.01, -1685.286984627218),
    (-7.25, 0.1, -1061.4892590156267),
    (-7.25, 0.5, 2219.9824365832997),
    (-7.25, 1.0, 142.09741181406437),
    (-7.25, 2.0, -3956.933821399844),
    (-7.25, 4.0, 11596.954845753415),
    (-7.25, 6.0, -33852.38979071348),
    (-7.25, 8.0, -14524.246457158284),
    (-7.25, 10.0, 278532.1267977621),
    (-7.25, 12.0, 332591.0704473242),
    (-7.25, 14.0, -1446081.0733315803),
    (-7.25, 16.0, -6142454.681747077),
    (-7.25, 18.0, -9070438.40740988),
    (-7.25, 20.0, 11046871.770713925),
    (-7.25, 22.0, 110468826.08143999),
    (-7.25, 24.0, 408524223.5686903),
    (-7.25, 26.0, 1127611929.785896),
    (-7.25, 28.0, 2647417503.796197),
    (-7.25, 30.0, 5575724157.5046015),
    (-7.25, 33.0, 14748039245.291195),
    (-7.25, 36.0, 34351306526.699627),
    (-7.25, 40.0, 91809059371.22086),
    (-7.25, 44.0, 216793518535.34753),
    (-7.25, 48.0, 465613773296.30054),
    (-7.25, 55.0, 1492835755546.1934),
    (-7.25, 62.0, 4058371785290.7744),
    (-7.25, 70.0, 10962987563166.332),
    (-7.25, 85.0, 52039156619490.664),
    (-7.25, 100.0, 187060132363070.22),
    (-7.25, 125.0, 1054143450703663.6),
    (-7.25, 150.0, 4249736942316608.0),
    (-7.25, 200.0, 3.737259617156264e+16),
    (-7.25, 260.0, 2.6587826227394666e+17),
    (-7.25, 330.0, 1.5613905697913853e+18),
    (-7.25, 400.0, 6.470157640173056e+18),
    (-9.75, 0.0, 255016.91066405844),
    (-9.75, 1e-08, 254855.5489259428),
    (-9.75, 0.0001, 238398.51667075296),
    (-9.75, 0.01, 55196.655475107764),
    (-9.75, 0.1, -355494.0881841855),
    (-9.75, 0.5, 237447.81878478822),
    (-9.75, 1.0, 416320.2287833229),
    (-9.75, 2.0, -966537.0556152242),
    (-9.75, 4.0, 2167478.096893802),
    (-9.75, 6.0, -7427267.033751542),
    (-9.75, 8.0, 14690389.488018295),
    (-9.75, 10.0, 27475703.43944698),
    (-9.75, 12.0, -143724360.3854001),
    (-9.75, 14.0, -237430607.009515),
    (-9.75, 16.0, 808420672.5795504),
    (-9.75, 18.0, 3220889009.2520657),
    (-9.75, 20.0, 1864753149.1180303),
    (-9.75, 22.0, -18042537904.13595),
    (-9.75, 24.0, -73574028093.18898),
    (-9.75, 26.0, -140155038614.47137),
    (-9.75, 28.0, -26316561232.437286),
    (-9.75, 30.0, 904549164129.5889),
    (-9.75, 33.0, 7866551714648.1455),
    (-9.75, 36.0, 36016656707878.74),
    (-9.75, 40.0, 181457540379679.84),
    (-9.75, 44.0, 694067410340240.6),
    (-9.75, 48.0, 2209770476811408.5),
    (-9.75, 55.0, 1.2360898499673038e+16),
    (-9.75, 62.0, 5.260615002465525e+16),
    (-9.75, 70.0, 2.1754889408077376e+17),
    (-9.75, 85.0, 1.956314842684994e+18),
    (-9.75, 100.0, 1.166036092015251e+19),
    (-9.75, 125.0, 1.276025347020366e+20),
    (-9.75, 150.0, 8.6767168625338e+20),
    (-9.75, 200.0, 1.69698512668318e+22),
    (-9.75, 260.0, 2.4536520585332975e+23),
    (-9.75, 330.0, 2.712881424338677e+24),
    (-9.75, 400.0, 1.8615606863109481e+25),
    (-12.25, 0.0, 101878622.48414327),
    (-12.25, 1e-08, 101950643.7801399),
    (-12.25, 0.0001, 108828097.22685029),
    (-12.25, 0.01, 144364516.61336347),
    (-12.25, 0.1, 18238803.353036325),
    (-12.25, 0.5, -89831047.23687352),
    (-12.25, 1.0, 238696521.21903834),
    (-12.25, 2.0, -380663141.8506789),
    (-12.25, 4.0, 896494421.024058),
    (-12.25, 6.0, -2655251316.2605267),
    (-12.25, 8.0, 8084615673.854352),
    (-12.25, 10.0, -8563019298.248267),
    (-12.25, 12.0, -47472735363.51304),
    (-12.25, 14.0, 125592600327.86617),
    (-12.25, 16.0, 336131529420.7023),
    (-12.25, 18.0, -741221409199.6901),
    (-12.25, 20.0, -3430651284950.1274),
    (-12.25, 22.0, -818870324991.8375),
    (-12.25, 24.0, 23264108687111.996),
    (-12.25, 26.0, 69444365791876.94),
    (-12.25, 28.0, 44808272307546.49),
    (-12.25, 30.0, -353566136827245.8),
    (-12.25, 33.0, -2689144677175258.5),
    (-12.25, 36.0, -4257923160751499.5),
    (-12.25, 40.0, 7.448094391761483e+16),
    (-12.25, 44.0, 8.433950991894387e+17),
    (-12.25, 48.0, 5.118623715316548e+18),
    (-12.25, 55.0, 6.20563150343682e+19),
    (-12.25, 62.0, 4.632325434357303e+20),
    (-12.25, 70.0, 3.1729761310161817e+21),
    (-12.25, 85.0, 5.881214465662352e+22),
    (-12.25, 100.0, 6.096926001916384e+23),
    (-12.25, 125.0, 1.3566305132229324e+25),
    (-12.25, 150.0, 1.598274303299556e+26),
    (-12.25, 200.0, 7.164201844267916e+27),
    (-12.25, 260.0, 2.1454258785820386e+29),
    (-12.25, 330.0, 4.522311955889015e+30),
    (-12.25, 400.0, 5.178916183767284e+31),
    (-15.75, 0.0, 1037246655432.057),
    (-15.75, 1e-08, 1036416480841.897),
    (-15.75, 0.0001, 951080484256.2421),
    (-15.75, 0.01, -21567943984.255154),
    (-15.75, 0.1, -1519638926205.0996),
    (-15.75, 0.5, 1865445580463.85),
    (-15.75, 1.0, -1918472410068.3618),
    (-15.75, 2.0, 3476376167404.279),
    (-15.75, 4.0, -6758445609085.832),
    (-15.75, 6.0, 10306636052787.564),
    (-15.75, 8.0, -48660484334212.07),
    (-15.75, 10.0, 218446271442620.8),
    (-15.75, 12.0, -490065715574731.06),
    (-15.75, 14.0, -430240153566584.5),
    (-15.75, 16.0, 4697876668291157.0),
    (-15.75, 18.0, -993976490064195.1),
    (-15.75, 20.0, -3.5441479681981824e+16),
    (-15.75, 22.0, -9023969108783954.0),
    (-15.75, 24.0, 2.5420603860329814e+17),
    (-15.75, 26.0, 4.463516500228644e+17),
    (-15.75, 28.0, -1.0174441744799359e+18),
    (-15.75, 30.0, -5.607517296314852e+18),
    (-15.75, 33.0, 1.6628472096641776e+17),
    (-15.75, 36.0, 1.1653964244909251e+20),
    (-15.75, 40.0, 8.009505378532726e+19),
    (-15.75, 44.0, -6.87043993395545e+21),
    (-15.75, 48.0, -2.7207263175906985e+22),
    (-15.75, 55.0, 1.9486485495604917e+24),
    (-15.75, 62.0, 5.8634623062411775e+25),
    (-15.75, 70.0, 1.0761913269619328e+27),
    (-15.75, 85.0, 6.946390510887802e+28),
    (-15.75, 100.0, 1.7506658025285176e+30),
    (-15.75, 125.0, 1.1617673754945343e+32),
    (-15.75, 150.0, 3.1186817347361617e+33),
    (-15.75, 200.0, 4.72953889087575e+35),
    (-15.75, 260.0, 4.0643121594680997e+37),
    (-15.75, 330.0, 2.1624351400632974e+39),
    (-15.75, 400.0, 5.143175998156056e+40),
    (-18.85, 0.0, -8966110969653216.0),
    (-18.85, 1e-08, -8962114259348086.0),
    (-18.85, 0.0001, -8533484130060705.0),
    (-18.85, 0.01, -2261039737418174.0),
    (-18.85, 0.1, 1.0536357371663694e+16),
    (-18.85, 0.5, -1.210260064735247e+16),
    (-18.85, 1.0, 1.620137881168714e+16),
    (-18.85, 2.0, -2.691636171954515e+16),
    (-18.85, 4.0, -3.750688196276694e+16),
    (-18.85, 6.0, 1.906249180590843e+17),
    (-18.85, 8.0, -5.252902191771876e+17),
    (-18.85, 10.0, 1.10337615871408e+18),
    (-18.85, 12.0, -3.9766002245259635e+17),
    (-18.85, 14.0, -8.621717663429925e+18),
    (-18.85, 16.0, 2.950307410397232e+19),
    (-18.85, 18.0, 7.284937712301651e+18),
    (-18.85, 20.0, -2.382546785371125e+20),
    (-18.85, 22.0, 9.078884578116595e+19),
    (-18.85, 24.0, 1.791855984267052e+21),
    (-18.85, 26.0, 2.1599357083733574e+20),
    (-18.85, 28.0, -1.3102825916810578e+22),
    (-18.85, 30.0, -1.957005342168846e+22),
    (-18.85, 33.0, 1.6053478727051048e+23),
    (-18.85, 36.0, 1.902890166689588e+23),
    (-18.85, 40.0, -5.76470195281814e+24),
    (-18.85, 44.0, 1.8831423222154366e+25),
    (-18.85, 48.0, 3.005478930504415e+26),
    (-18.85, 55.0, -1.1850148352219343e+28),
    (-18.85, 62.0, 7.452601308010226e+28),
    (-18.85, 70.0, 2.789150844591993e+31),
    (-18.85, 85.0, 9.310038378991593e+33),
    (-18.85, 100.0, 6.1678561787354634e+35),
    (-18.85, 125.0, 1.2312472773450594e+38),
    (-18.85, 150.0, 7.320702159332506e+39),
    (-18.85, 200.0, 3.489675320425234e+42),
    (-18.85, 260.0, 7.922159720142726e+44),
    (-18.85, 330.0, 9.80061736458378e+46),
    (-18.85, 400.0, 4.517351714604374e+48),
    (-21.5, 0.0, 0.0),
    (-21.5, 1e-08, -2.6887033020968556e+16),
    (-21.5, 0.0001, -2.684940998767066e+18),
    (-21.5, 0.01, -2.327072156596073e+19),
    (-21.5, 0.1, -5.798532818570172e+18),
    (-21.5, 0.5, -1.117162578731208e+19),
    (-21.5, 1.0, -5.468360387036246e+18),
    (-21.5, 2.0, -4.281189788526743e+19),
    (-21.5, 4.0, 7.148200910783264e+19),
    (-21.5, 6.0, 3.287019896455043e+20),
    (-21.5, 8.0, -1.200478513136402e+21),
    (-21.5, 10.0, 2.6599189039679055e+21),
    (-21.5, 12.0, -1.652998139523111e+21),
    (-21.5, 14.0, -1.908818890924567e+22),
    (-21.5, 16.0, 9.040117294186141e+22),
    (-21.5, 18.0, -1.1098002774151833e+23),
    (-21.5, 20.0, -4.7849856629154134e+23),
    (-21.5, 22.0, 1.5516093301804467e+24),
    (-21.5, 24.0, 2.3622975940247783e+24),
    (-21.5, 26.0, -1.2370320347347032e+25),
    (-21.5, 28.0, -2.0226738129602057e+25),
    (-21.5, 30.0, 7.91392910940819e+25),
    (-21.5, 33.0, 1.3730239275140453e+26),
    (-21.5, 36.0, -2.16259149636011e+27),
    (-21.5, 40.0, 1.0379860514945638e+28),
    (-21.5, 44.0, 4.569305843168373e+28),
    (-21.5, 48.0, -9.31126349535036e+29),
    (-21.5, 55.0, 3.107668906076355e+31),
    (-21.5, 62.0, -6.3155159658556945e+32),
    (-21.5, 70.0, -1.9499699939654047e+34),
    (-21.5, 85.0, 1.1758542485855082e+38),
    (-21.5, 100.0, 2.3318621699922184e+40),
    (-21.5, 125.0, 1.3861627519567326e+43),
    (-21.5, 150.0, 1.733204233033854e+45),
    (-21.5, 200.0, 2.331413650911984e+48),
    (-21.5, 260.0, 1.253220958084741e+51),
    (-21.5, 330.0, 3.251054878711299e+53),
    (-21.5, 400.0, 2.6681301392295136e+55),
    (-24.25, 0.0, 1.1139673028766516e+23),
    (-24.25, 1e-08, 1.1150695624943302e+23),
    (-24.25, 0.0001, 1.2186742233997633e+23),
    (-24.25, 0.01, 1.550313037484637e+23),
    (-24.25, 0.1, -1.1577751332647232e+23),
    (-24.25, 0.5, 2.0198289315209658e+23),
    (-24.25, 1.0, -2.465818708601292e+23),
    (-24.25, 2.0, 3.550593253522516e+23),
    (-24.25, 4.0, 1.1757539767231419e+24),
    (-24.25, 6.0, -1.0953489983963152e+24),
    (-24.25, 8.0, -1.1052183666366359e+24),
    (-24.25, 10.0, 3.220865408799323e+24),
    (-24.25, 12.0, 1.2498600286624675e+25),
    (-24.25, 14.0, -1.2548651210774855e+26),
    (-24.25, 16.0, 4.9098874320910495e+26),
    (-24.25, 18.0, -7.829703461589528e+26),
    (-24.25, 20.0, -1.693601476256965e+27),
    (-24.25, 22.0, 9.960718440422053e+27),
    (-24.25, 24.0, -2.782274859052925e+27),
    (-24.25, 26.0, -7.31235044401311e+28),
    (-24.25, 28.0, 5.916422629255321e+28),
    (-24.25, 30.0, 5.4478840112661146e+29),
    (-24.25, 33.0, -1.9597075035794158e+30),
    (-24.25, 36.0, -2.6736756639106874e+30),
    (-24.25, 40.0, 6.6007039662831995e+31),
    (-24.25, 44.0, -6.507489222075943e+32),
    (-24.25, 48.0, 2.0912094831367347e+33),
    (-24.25, 55.0, -9.939968677299603e+34),
    (-24.25, 62.0, 2.0904044150535584e+36),
    (-24.25, 70.0, -4.363339567749638e+36),
    (-24.25, 85.0, 5.041831137772045e+41),
    (-24.25, 100.0, 7.903777398385899e+44),
    (-24.25, 125.0, 1.8631137033808033e+48),
    (-24.25, 150.0, 5.472410244923743e+50),
    (-24.25, 200.0, 2.3129901615640363e+54),
    (-24.25, 260.0, 3.1480347553943536e+57),
    (-24.25, 330.0, 1.797005499731638e+60),
    (-24.25, 400.0, 2.715381599044083e+62),
    (-24.75, 0.0, -5.514000331943368e+23),
    (-24.75, 1e-08, -5.508483465255633e+23),
    (-24.75, 0.0001, -4.936204854708323e+23),
    (-24.75, 0.01, 1.6690737171894084e+23),
    (-24.75, 0.1, 5.679642213684388e+23),
    (-24.75, 0.5, -3.242917279782152e+21),
    (-24.75, 1.0, 2.895904810270581e+23),
    (-24.75, 2.0, 1.4419443159651677e+24),
    (-24.75, 4.0, 1.3351670081346674e+24),
    (-24.75, 6.0, -1.5828893973117744e+25),
    (-24.75, 8.0, 3.9793526562241395e+25),
    (-24.75, 10.0, -1.0657921553772236e+26),
    (-24.75, 12.0, 3.2044440697698067e+26),
    (-24.75, 14.0, -8.218708120519824e+26),
    (-24.75, 16.0, 9.964950940175345e+26),
    (-24.75, 18.0, 3.2293088307301886e+27),
    (-24.75, 20.0, -1.815971455750881e+28),
    (-24.75, 22.0, 1.7339403771494292e+28),
    (-24.75, 24.0, 1.1093611456158316e+29),
    (-24.75, 26.0, -2.6102598936094748e+29),
    (-24.75, 28.0, -6.704490911996045e+29),
    (-24.75, 30.0, 2.0866775423310949e+30),
    (-24.75, 33.0, 1.0390298766250062e+30),
    (-24.75, 36.0, -5.239333218649181e+31),
    (-24.75, 40.0, 4.235753051585859e+32),
    (-24.75, 44.0, -1.8510928048535683e+33),
    (-24.75, 48.0, -8.644638444529784e+33),
    (-24.75, 55.0, 8.710155318673915e+34),
    (-24.75, 62.0, -8.372909976292591e+36),
    (-24.75, 70.0, 8.871963031489441e+38),
    (-24.75, 85.0, 1.2441148741461924e+42),
    (-24.75, 100.0, 4.883575066591043e+45),
    (-24.75, 125.0, 1.5433975268475036e+49),
    (-24.75, 150.0, 5.355438323218638e+51),
    (-24.75, 200.0, 2.8114453305250874e+55),
    (-24.75, 260.0, 4.549200829825494e+58),
    (-24.75, 330.0, 3.0042715636196125e+61),
    (-24.75, 400.0, 5.079277504380555e+63),
];
