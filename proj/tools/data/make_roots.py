#!/usr/bin/env python3
"""Regenerates data/roots.tsv from the word lists below."""
import pathlib

OUT = pathlib.Path(__file__).resolve().parents[2] / "data" / "roots.tsv"

ORDINARY = """
ev el göz yüz baş kol bacak ayak kulak burun ağız diş saç parmak kalp kan kemik deri
anne baba kardeş abla ağabey kız oğlan çocuk bebek adam kadın erkek insan aile arkadaş komşu
masa sandalye kapı pencere duvar oda mutfak banyo bahçe balkon çatı merdiven dolap yatak yastık
kitap defter kalem silgi kağıt mektup gazete dergi sayfa harf kelime cümle dil tarih coğrafya
okul sınıf öğrenci öğretmen ders sınav ödev soru cevap bilgi fikir düşünce akıl ruh can
su ekmek peynir zeytin yumurta süt çay kahve şeker tuz yemek çorba pilav et tavuk balık meyve
elma armut portakal limon üzüm çilek kiraz karpuz domates biber patates soğan sarımsak havuç
ağaç çiçek yaprak dal kök tohum orman dağ tepe ova vadi deniz göl nehir ırmak kıyı ada kum taş
toprak çamur hava rüzgar yağmur kar bulut güneş ay yıldız gök gece gündüz sabah akşam öğle
zaman saat dakika gün hafta yıl mevsim ilkbahar yaz sonbahar kış hayat ölüm doğum
kedi köpek kuş at inek koyun keçi tavuk horoz arı kelebek böcek yılan aslan kaplan ayı kurt tilki
araba otobüs tren uçak gemi bisiklet yol sokak cadde köprü şehir köy kasaba ülke dünya
para fiyat pazar dükkan market çarşı banka hesap borç iş işçi patron memur doktor hemşire hasta
hastane ilaç ağrı sağlık spor oyun top takım maç gol müzik şarkı resim film sinema tiyatro
renk kırmızı mavi yeşil sarı siyah beyaz mor pembe turuncu gri kahverengi
büyük küçük uzun kısa yeni eski güzel çirkin iyi kötü sıcak soğuk hızlı yavaş kolay zor
açık kapalı dolu boş temiz kirli genç yaşlı zengin fakir mutlu üzgün tatlı acı ekşi tuzlu
koyu açık ağır hafif derin sığ geniş dar yüksek alçak yakın uzak erken geç doğru yanlış
aydın değil diğer uğur düğün sığır sığan doğan yoğurt iğne bağ yağ çağ değer eğer
kral prens gram grup plan kredi program problem trafik stres klasik plastik tren spor
televizyon revizyon sinema radyo telefon bilgisayar internet mesaj haber
yorum yortu kapı kapak bardak kaşık çatal bıçak tabak tencere tava fincan şişe kutu çanta
cep düğme gömlek pantolon etek ceket şapka ayakkabı çorap eldiven atkı elbise
sevgi aşk nefret korku öfke umut hayal rüya gerçek yalan sır şaka oyun hikaye masal şiir
roman yazar şair ressam sanat sanatçı kültür din tanrı cami kilise bayram tatil
devlet millet halk ordu asker savaş barış hukuk kanun hak adalet mahkeme polis vergi
bilim fen matematik fizik kimya biyoloji tıp mühendis makine motor enerji elektrik ışık
ses söz ad soyad yaş boy kilo metre litre sayı bir iki üç dört beş altı yedi sekiz dokuz on
yüz bin milyon ilk son orta sağ sol ön arka alt üst iç dış
kapak sepet kafes yuva kutu kuyu çeşme havuz bina ev apartman otel lokanta kafe
şimdi yarın belki sonra papatya pencere bugün hanımeli başbakan cumartesi pazartesi yüzbaşı
abide lale çiftlik kitap zaman hayal hal ilan imkan mekan tamam memur vali hatıra rica nihayet
kağıt rüzgar dükkan kalp cumhuriyet tank saat hayat sanat millet devlet hukuk ahlak dikkat
koyu kısa çekiç ceset
""".split()

VERBS = """
gel git oku yap al ver gör dön bul sev anla yaz otur kal başla çalış söyle düşün bak sor
yürü koş uyu aç bekle getir öğren öğret çık gir bin dur tut yat at koy bil de ye ağla
yorul bitir giy sus düş kaç seç geç öl kork ara yaşa izle dinle konuş gül sil kes yıka
hazırla kullan ağar iç
""".split()

# Monosyllables whose final p/ç/t/k does voice before a vowel.
MONO_VOICING = {"kap", "dip", "renk", "kurt", "yurt", "dört", "git", "borç", "gök", "kalp"}

NOSOFTEN = {"tank", "saat", "hayat", "sanat", "millet", "devlet", "hukuk", "cumhuriyet", "ahlak",
            "dikkat", "nihayet", "bisiklet", "trafik", "klasik", "plastik"}

LISTED = {
    "abide": "a: b i d e",
    "lale": "l a l e",
    "çiftlik": "tS i f t l i c | tS i f l i c",
    "zaman": "z a m a n",
    "hayal": "h a j a l",
    "hal": "h a l",
    "ilan": "i l a: n",
    "imkan": "i m c a: n",
    "mekan": "m e c a: n",
    "tamam": "t a m a: m",
    "memur": "m e: m u r",
    "vali": "v a: l i",
    "hatıra": "h a: t 1 r a",
    "rica": "r i dZ a:",
    "nihayet": "n i h a: j e t",
    "kağıt": "c a: 1 t",
    "rüzgar": "r y z gj a: r",
    "dükkan": "d y c c a: n",
    "kalp": "c a l p",
    "saat": "s a: a t",
    "hikaye": "h i c a: j e",
    "dikkat": "d i c c a t",
    "ahlak": "a h l a: k",
    "kanun": "k a: n u n",
}

LENGTHENS = {"zaman", "hayal", "hal"}

FIXED_STRESS = {"papatya": 1, "pencere": 0, "lokanta": 1, "sandalye": 1, "şimdi": 0, "yarın": 0,
                "belki": 0, "sonra": 0, "masa": 0, "tiyatro": 1, "patates": 1, "domates": 1}

COMPOUND_STRESS = {"bugün": 0, "kahverengi": 1, "hanımeli": 1, "ayakkabı": 1, "başbakan": 1,
                   "cumartesi": 1, "pazartesi": 1, "yüzbaşı": 0}

NARROW = {"de", "ye"}

# Stems that are both nouns and verbs.
NOUN_VERB = {"koy", "yaz", "at", "iç", "aç", "kaç"}

GEOGRAPHICAL = """
ankara mudanya aydın zonguldak istanbul izmir bursa antalya adana konya trabzon samsun edirne
eskişehir kayseri malatya sinop rize ordu giresun çanakkale kastamonu bolu denizli manisa muğla
erzurum van kars minsk londra moskova berlin
""".split()

PROPER = """
aydın ahmet mehmet sarp ayşe murat elif can deniz kemal zeynep mustafa fatma ali emre burak
""".split()

GEO_NOSOFTEN = {"minsk"}
PROPER_NOSOFTEN = {"sarp"}

# Abbreviations: surface -> listed prons or "-" for rule readings.
ABBREVIATIONS = {
    "tr": "-", "aa": "-", "ab": "-", "akp": "-", "aft": "-", "stm": "-", "thy": "-", "sat": "-",
    "itü": "-", "tüik": "-", "tai": "-", "aal": "-", "mta": "m e t e: a:", "aet": "-",
    "ptt": "-", "bddk": "-", "tbmm": "-", "trt": "-", "chp": "-", "mhp": "-", "hdp": "-",
    "odtü": "-", "bm": "-", "abd": "-", "nato": "-", "ytü": "-", "ibb": "-", "sgk": "-",
    "tff": "-", "uefa": "-", "pkk": "-", "dsi": "-", "tse": "-", "kpss": "-", "yök": "-",
    "ösym": "-", "meb": "-", "tdk": "-", "iett": "-", "ego": "-", "aşti": "-", "tcdd": "-",
    "tübitak": "-", "tüsiad": "-",
}
FOREIGN_ABBREVIATIONS = {"mtv": "-", "ntv": "-", "ai": "-", "cnn": "-", "bbc": "-", "fifa": "-",
                         "ulm": "u 5 m | u e l e m | u: l e: m e:", "nasa": "-"}

FOREIGN = {
    "google": "g u g l 5 | g o g l 5 | g o g l e",
    "generation": "dZ e n e r e j S l n | gj e n e r a s j o n",
    "facebook": "f e j s b u k",
    "twitter": "t v i t e r | t i v i t i r",
}
FOREIGN_RULE = """
gemini windows iphone youtube instagram microsoft apple android linux server online email laptop mouse
software hardware update download upload cloud smart phone game player team manager designer
marketing startup meeting weekend party show shopping cool happy style fashion news web blog
chat selfie like share follow message password login click screen keyboard browser cookie
account wireless bluetooth spotify netflix amazon whatsapp kindle photoshop excel office zoom
skype gmail chrome firefox oracle java python tweet hashtag story
""".split()


def syllables(word):
    return sum(1 for c in word if c in "aeıioöuü")


def rows():
    out = []
    seen = set()

    def add(surface, genres, prons="-", flags=()):
        key = (surface, genres)
        if key in seen:
            return
        seen.add(key)
        out.append((surface, genres, prons, " ".join(flags) if flags else "-"))

    verbs = set(VERBS)
    for w in dict.fromkeys(ORDINARY + VERBS):
        flags = []
        if w in LENGTHENS:
            flags.append("lengthens=1")
        last = w[-1]
        if w in NOSOFTEN or (last in "pçtk" and syllables(w) == 1 and w not in MONO_VOICING):
            flags.append("nosoften=1")
        if w in NARROW:
            flags.append("narrow=1")
        if w in NOUN_VERB or (w in verbs and w in ORDINARY):
            flags.append("pos=N,V")
        elif w in verbs:
            flags.append("pos=V")
        if w in FIXED_STRESS:
            flags.append(f"stress={FIXED_STRESS[w]}")
        if w in COMPOUND_STRESS:
            flags.append(f"cstress={COMPOUND_STRESS[w]}")
        add(w, "ordinary", LISTED.get(w, "-"), flags)
    for w in GEOGRAPHICAL:
        add(w, "geographical", "-", ["nosoften=1"] if w in GEO_NOSOFTEN else [])
    for w in PROPER:
        add(w, "proper", "-", ["nosoften=1"] if w in PROPER_NOSOFTEN else [])
    for w, p in ABBREVIATIONS.items():
        add(w, "abbreviation", p)
    for w, p in FOREIGN_ABBREVIATIONS.items():
        add(w, "abbreviation,foreign", p)
    for w, p in FOREIGN.items():
        add(w, "foreign", p)
    for w in FOREIGN_RULE:
        add(w, "foreign")
    return out


def main():
    lines = ["# surface\tgenres\tprons (- = by rule; alternatives split by |)\tflags",
             "# flags: lengthens=1 nosoften=1 narrow=1 pos=N|V|N,V stress=N cstress=N (0-based vowel)"]
    for r in rows():
        lines.append("\t".join(r))
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
