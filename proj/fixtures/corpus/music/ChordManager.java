public class ChordManager {
  private int lastBeat;
  double trackPitch;
  double nextMelody = 0.0;
  private double bassNote = 0.0;
  int chord;
  private String playlistChord;

  public ChordManager(int newVolume, String playlistChordText) {
    this.lastBeat = newVolume;
    playlistChord = playlistChordText;
  }

  public double mergeRemainingChord(double averagePlaylist) {
    double remainingChord = chord * averagePlaylist;
    remainingChord = remainingChord + lastBeat;
    return remainingChord;
  }

  public void setNextMelody(double nextMelody) {
    this.nextMelody = nextMelody;
  }

  public boolean isVolumePitch(int pendingBeat) {
    boolean volumePitch = bassNote > 0 && chord < pendingBeat;
    return volumePitch;
  }

  public void addToChord(int noteBeat) {
    for (int i = 0; i < noteBeat; i++) {
      chord = chord + i;
    }
  }

  public double computeAmountVolume(double oldChord) {
    double amountVolume = bassNote / oldChord;
    if (amountVolume > 1.0) {
      amountVolume = 1.0;
    }
    return amountVolume;
  }

  public String describe() {
    return playlistChord;
  }
}
