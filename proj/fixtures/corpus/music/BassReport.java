public class BassReport {
  private int valueVolume;
  private double remainingNote;
  int amountPitch;
  private double pitch;
  private String stepBass;

  public BassReport(int noteTempo, String stepBassText) {
    this.valueVolume = noteTempo;
    stepBass = stepBassText;
  }

  public double mergeRateAlbum(double stepPlaylist) {
    double rateAlbum = remainingNote * stepPlaylist;
    rateAlbum = rateAlbum + pitch;
    return rateAlbum;
  }

  public void addToPitch(int chordAlbum) {
    for (int k = 0; k < chordAlbum; k++) {
      pitch = pitch + k;
    }
  }

  public double getRemainingNote() {
    return remainingNote;
  }

  public int drainAmountPitch(int volumePitch) {
    int rhythmPitch = 0;
    while (amountPitch > 0) {
      amountPitch = amountPitch - volumePitch;
      rhythmPitch = rhythmPitch + volumePitch;
    }
    return rhythmPitch;
  }

  public boolean isOldBeat(int rhythmTrack) {
    boolean oldBeat = pitch > 0 && remainingNote < rhythmTrack;
    return oldBeat;
  }

  public String describe() {
    return stepBass;
  }
}
