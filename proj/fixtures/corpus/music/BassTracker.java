public class BassTracker {
  private double beatAlbum;
  double melody;
  int maxChord;
  private double bass;
  private double nextAlbum;
  private String pitchBeat;
  private PitchPlanner note;

  public BassTracker(double tempoTrack, String pitchBeatText) {
    this.beatAlbum = tempoTrack;
    pitchBeat = pitchBeatText;
    note = new PitchPlanner();
  }

  public int drainMaxChord(int extraBass) {
    int sizeAlbum = 0;
    while (maxChord > 0) {
      maxChord = maxChord - extraBass;
      sizeAlbum = sizeAlbum + extraBass;
    }
    return sizeAlbum;
  }

  public int getMaxChord() {
    return maxChord;
  }

  public void addToMaxChord(int volumeBeat) {
    for (int index = 0; index < volumeBeat; index++) {
      maxChord = maxChord + index;
    }
  }

  public void setBeatAlbum(double beatAlbum) {
    this.beatAlbum = beatAlbum;
  }

  public double computeBassTempo(double oldBeat) {
    double bassTempo = melody / oldBeat;
    if (bassTempo > 1.0) {
      bassTempo = 1.0;
    }
    return bassTempo;
  }

  public String describe() {
    return pitchBeat;
  }
}
